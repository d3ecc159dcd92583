#pragma once

#include "lagrangelab/lattice.hpp"

#include <optional>
#include <vector>

namespace lagrangelab {

/// t = gamma_1 + ... + gamma_n.
[[nodiscard]] IntVector maslov_vector(const QuadricSystem& q);

/// mu(r_i) = <epsilon_i, t>. Throws ErrorKind::Invariant on a non-integral value.
[[nodiscard]] IntVector maslov_on_generators(const LatticeData& l, std::span<const Integer> t);

/// <epsilon_i, delta>: the area of r_i in units of pi/2.
[[nodiscard]] RatVector area_on_generators(const LatticeData& l, std::span<const Rational> delta);

/// gcd of |mu_i|, 0 when all vanish.
[[nodiscard]] Integer minimal_maslov(std::span<const Integer> mu);

/// c > 0 with delta = c t, if any.
[[nodiscard]] std::optional<Rational> monotonicity(const QuadricSystem& q);

struct MaslovReport {
  IntVector t;
  std::vector<int> orientation;  // +1 or -1 per generator r_i
  IntVector mu;                  // orientation[i] * <epsilon_i, t>
  RatVector area_half_pi;        // orientation[i] * <epsilon_i, delta>
  Integer minimal_maslov;
  bool monotone = false;
  std::optional<Rational> mono_c;
  std::optional<Rational> mono_lambda_over_mu;  // c / 2, in units of pi
};

/// Each r_i is oriented so that its area is nonnegative (or, at zero area,
/// so that its Maslov index is nonnegative).
[[nodiscard]] MaslovReport maslov_report(const QuadricSystem& q, const LatticeData& l);

}  // namespace lagrangelab
