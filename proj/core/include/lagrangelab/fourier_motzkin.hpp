#pragma once

#include "lagrangelab/exact.hpp"

#include <optional>
#include <vector>

namespace lagrangelab {

enum class Relation { Ge, Gt, Eq };

/// coeffs · x  (relation)  rhs
struct LinearConstraint {
  RatVector coeffs;
  Relation rel = Relation::Ge;
  Rational rhs;
};

/// Exact feasibility by Fourier-Motzkin elimination. Equalities are
/// substituted away first. Returns a witness point or nullopt.
[[nodiscard]] std::optional<RatVector> fm_feasible_point(std::size_t vars,
                                                         std::vector<LinearConstraint> constraints);

}  // namespace lagrangelab
