#pragma once

#include "lagrangelab/polytope.hpp"

#include <optional>
#include <vector>

namespace lagrangelab {

/// R_{Gamma,delta} = { u : sum_j gamma_j u_j^2 = delta }, column j of gamma is gamma_j.
struct QuadricSystem {
  IntMatrix gamma;  // (n-k) x n
  RatVector delta;  // length n-k

  [[nodiscard]] std::size_t equations() const noexcept { return gamma.rows(); }
  [[nodiscard]] std::size_t variables() const noexcept { return gamma.cols(); }

  friend bool operator==(const QuadricSystem&, const QuadricSystem&) = default;
};

/// Throws ErrorKind::Input on shape errors and ErrorKind::Structural when gamma
/// lacks full row rank.
void validate(const QuadricSystem& q);

[[nodiscard]] QuadricSystem polytope_to_quadrics(const PolytopePresentation& p);
[[nodiscard]] PolytopePresentation quadrics_to_polytope(const QuadricSystem& q);

/// Row-HNF of the saturated row lattice, with delta transformed alongside.
[[nodiscard]] QuadricSystem canonical_form(const QuadricSystem& q);

/// Identical columns of gamma grouped into classes. A point of R only matters
/// through the class sums s_c = sum of u_j^2 over the class.
struct ColumnClasses {
  IntMatrix vectors;                   // (n-k) x classes, first-occurrence order
  std::vector<std::size_t> multiplicity;
  std::vector<std::size_t> class_of;   // per original column
  std::vector<std::vector<std::size_t>> members;
};

[[nodiscard]] ColumnClasses column_classes(const IntMatrix& gamma);

/// Basic feasible point of { s >= 0 : Gamma_c s = delta } on the class system.
struct ClassVertex {
  RatVector s;
  std::vector<std::size_t> support;  // classes with s_c > 0
};

/// Structural verdicts read from the quadric side alone.
struct QuadricFlags {
  bool nonempty = false;
  bool bounded = false;   // a positive row combination exists
  bool smooth = false;    // every basic point has full-rank support
  bool connected = false; // irredundant presentation

  friend bool operator==(const QuadricFlags&, const QuadricFlags&) = default;
};

struct QuadricAnalysis {
  ColumnClasses classes;
  std::vector<ClassVertex> vertices;
  QuadricFlags flags;
  std::optional<RatVector> positive_row;
};

[[nodiscard]] QuadricAnalysis analyze_quadrics(const QuadricSystem& q);

}  // namespace lagrangelab
