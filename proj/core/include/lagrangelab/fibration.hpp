#pragma once

#include "lagrangelab/lattice.hpp"
#include "lagrangelab/topology.hpp"

#include <vector>

namespace lagrangelab {

enum class TrivialHint { Trivial, NonOrientable, OrientableUnknown };

[[nodiscard]] const char* to_string(TrivialHint h);

/// The bundle R x_D T -> T^{n-k}.
struct FibrationDescriptor {
  std::size_t base_torus_dim = 0;
  TopologyExpr fiber;
  std::vector<SignAction> actions;
  std::vector<bool> generator_orientation_preserving;
  bool orientable = false;
  TrivialHint trivial_hint = TrivialHint::OrientableUnknown;
};

/// A deck generator changes the sign of some coordinates and preserves the
/// orientation of the normal bundle iff it changes an even number of them,
/// which is also the parity of mu_i. Both counts are computed and must agree.
[[nodiscard]] FibrationDescriptor fibration_descriptor(const QuadricSystem& q,
                                                       const std::vector<SignAction>& actions,
                                                       const TopologyExpr& fiber,
                                                       std::span<const Integer> mu);

/// Per generator: is mu_i even.
[[nodiscard]] std::vector<bool> orientability_parity_check(std::span<const Integer> mu);

}  // namespace lagrangelab
