#pragma once

#include "lagrangelab/gale.hpp"

#include <optional>
#include <vector>

namespace lagrangelab {

/// Lattice Lambda = Z<gamma_1..gamma_n>, a basis drawn from the columns and
/// the dual basis: row i of dual_basis is epsilon_i, <epsilon_i, gamma_{j_m}> = [i == m].
struct LatticeData {
  std::vector<std::size_t> basis_columns;  // 0-based, increasing; may be empty
  RatMatrix dual_basis;
  bool full_rank = false;
  IntMatrix lattice_basis;  // HNF basis of Lambda (rows)
};

/// Picks the lexicographically last index set whose columns generate Lambda.
/// Repeated columns are represented by their last occurrence. When no such
/// set exists basis_columns is empty and the dual basis is taken against the
/// rows of lattice_basis.
[[nodiscard]] LatticeData lattice_data(const QuadricSystem& q);

struct SignAction {
  std::size_t generator_index = 0;
  std::vector<bool> flips;  // flips[j] = <epsilon_i, gamma_j> mod 2
};

[[nodiscard]] std::vector<SignAction> sign_actions(const QuadricSystem& q, const LatticeData& l);

struct EmbeddingResult {
  bool embedded = false;
  std::optional<std::size_t> witness;  // index into the vertex list
};

/// Lambda_u = Lambda at each vertex, with supports read from the polytope
/// vertices. Points of a face have a support containing that of a vertex of
/// the face, so vertices are enough.
[[nodiscard]] EmbeddingResult embedding_check(const QuadricSystem& q, const std::vector<VertexData>& verts);

/// Same test on the class vertices of analyze_quadrics.
[[nodiscard]] EmbeddingResult embedding_check(const QuadricSystem& q, const QuadricAnalysis& qa);

}  // namespace lagrangelab
