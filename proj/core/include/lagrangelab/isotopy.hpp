#pragma once

#include "lagrangelab/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lagrangelab {

/// rank of H_1(L; Z_2) for L = fiber x T^base_dim; nullopt unless trivial
/// and the fiber is understood.
[[nodiscard]] std::optional<long> h1_mod2_rank(const TopologyExpr& fiber, std::size_t base_dim, bool trivial);

/// Number of smooth isotopy classes of embeddings L -> R^{2 dim}; nullopt means infinite.
/// Throws ErrorKind::Input when dim_L < 5 or the rank is missing for even dim.
[[nodiscard]] std::optional<Integer> hh_bound(long dim_l, std::optional<long> rank);

/// What pigeonhole_report needs from a Lagrangian.
struct IsotopyInput {
  std::string label;
  TopologyExpr fiber;
  std::size_t base_dim = 0;
  bool trivial = false;
  bool orientable = false;
  bool embedded = true;
  std::size_t ambient_n = 0;
  Integer minimal_maslov;
};

struct IsotopyVerdict {
  long dim_l = 0;
  bool applicable = false;          // false: non-orientable or too small
  std::string note;
  std::optional<long> h1_mod2_rank;
  std::optional<Integer> smooth_class_bound;  // nullopt = infinite
  std::vector<Integer> distinct_maslov_values;
  bool collision = false;
};

/// All members must share fiber, base dimension, trivial flag and ambient
/// dimension (ErrorKind::Input otherwise).
[[nodiscard]] IsotopyVerdict pigeonhole_report(const std::vector<IsotopyInput>& family);

}  // namespace lagrangelab
