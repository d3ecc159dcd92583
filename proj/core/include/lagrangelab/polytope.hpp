#pragma once

#include "lagrangelab/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lagrangelab {

/// P_{A,b} = { x in Q^k : <a_i, x> + b_i >= 0 }, column i of `normals` is a_i.
struct PolytopePresentation {
  IntMatrix normals;  // k x n
  RatVector offsets;  // length n

  [[nodiscard]] std::size_t dim() const noexcept { return normals.rows(); }
  [[nodiscard]] std::size_t facets() const noexcept { return normals.cols(); }
};

/// Throws ErrorKind::Input unless n > k >= 1, lengths agree and no normal is zero.
void validate(const PolytopePresentation& p);

struct VertexData {
  RatVector point;
  std::vector<std::size_t> active;  // sorted facet indices, 0-based
};

struct StructuralFlags {
  bool nonempty = false;
  bool bounded = false;
  bool generic_simple = false;
  bool irredundant = false;
  bool primitive_normals = false;

  friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

struct EnumerationOptions {
  // Upper limit on the number of candidate subsets examined.
  std::uint64_t subset_cap = 137846528820ULL;  // C(40,20)
};

/// Binomial coefficient, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of candidate subsets enumerate_vertices would examine.
[[nodiscard]] std::uint64_t enumeration_cost(const PolytopePresentation& p);

/// Exact vertex enumeration, sorted lexicographically by point.
[[nodiscard]] std::vector<VertexData> enumerate_vertices(const PolytopePresentation& p,
                                                         const EnumerationOptions& opt = {});

[[nodiscard]] StructuralFlags structural_flags(const PolytopePresentation& p,
                                               const std::vector<VertexData>& verts);

struct DelzantResult {
  bool is_delzant = false;
  std::optional<std::size_t> witness;  // index into the vertex list
};

/// Requires a simple polytope (throws ErrorKind::Structural otherwise).
[[nodiscard]] DelzantResult delzant_check(const PolytopePresentation& p,
                                          const std::vector<VertexData>& verts);

struct FanoData {
  Rational c;
  RatVector translation;  // v with A^T v + b = c * 1
};

struct FanoResult {
  std::optional<FanoData> fano;
  std::string diagnostic;  // set when the check was refused
};

[[nodiscard]] FanoResult fano_check(const PolytopePresentation& p);

/// Divides each normal and its offset by the gcd of the normal's entries.
[[nodiscard]] PolytopePresentation normalize_normals(const PolytopePresentation& p);

/// Positive combination w with (w Gamma)_j > 0 for all columns, if one exists.
[[nodiscard]] std::optional<RatVector> positive_row_combination(const IntMatrix& gamma);

}  // namespace lagrangelab
