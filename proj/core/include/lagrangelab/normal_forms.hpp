#pragma once

#include "lagrangelab/matrix.hpp"

#include <optional>

namespace lagrangelab {

struct HermiteForm {
  IntMatrix h;  // row Hermite normal form of the input
  IntMatrix u;  // unimodular, h = u * input
};

struct SmithForm {
  IntMatrix d;  // diagonal, d(i,i) divides d(i+1,i+1), entries nonnegative
  IntMatrix u;  // unimodular, d = u * input * v
  IntMatrix v;  // unimodular
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are moved to the bottom.
[[nodiscard]] HermiteForm hnf(const IntMatrix& m);

/// Smith normal form by elementary moves, pivoting on the smallest nonzero
/// absolute entry of the remaining block.
[[nodiscard]] SmithForm snf(const IntMatrix& m);

/// Rows form a basis of { x in Z^cols : m x = 0 }, returned in HNF.
/// The result has zero rows when the kernel is trivial.
[[nodiscard]] IntMatrix integer_kernel(const IntMatrix& m);

/// Some x with m x = v, or nullopt when the system is inconsistent.
/// Free variables are set to zero; pivots are taken in increasing column order.
[[nodiscard]] std::optional<RatVector> solve_rational(const IntMatrix& m,
                                                      std::span<const Rational> v);

/// Unique solution of a square system, or nullopt when m is singular.
[[nodiscard]] std::optional<RatVector> solve_square(const IntMatrix& m,
                                                    std::span<const Rational> v);

/// Row HNF with zero rows dropped: a canonical basis of the row lattice.
[[nodiscard]] IntMatrix lattice_basis(const IntMatrix& generators);

/// Index of the lattice spanned by rows of `sub` inside the lattice spanned by
/// rows of `full`. nullopt means the index is infinite (ranks differ).
/// Throws ErrorKind::Input when `sub` is not contained in `full`.
[[nodiscard]] std::optional<Integer> lattice_index(const IntMatrix& sub, const IntMatrix& full);

/// Exact membership test of an integer vector in the row lattice of `basis`
/// (which must already be a row HNF without zero rows).
[[nodiscard]] bool in_lattice(const IntMatrix& basis, std::span<const Integer> v);

}  // namespace lagrangelab
