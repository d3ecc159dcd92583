#pragma once

#include "lagrangelab/fibration.hpp"
#include "lagrangelab/isotopy.hpp"
#include "lagrangelab/maslov.hpp"
#include "lagrangelab/numeric.hpp"
#include "lagrangelab/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lagrangelab {

using Input = std::variant<PolytopePresentation, QuadricSystem>;

struct CheckOptions {
  bool normalize_normals = false;
  bool numeric = true;
  std::uint64_t seed = 1;
  Tolerances tol;
  // The polytope side (vertex enumeration, Delzant, Fano) only runs below these sizes.
  std::size_t polytope_facet_limit = 40;
  std::uint64_t polytope_subset_budget = 2'000'000;
  std::size_t numeric_variable_limit = 200;
};

struct PolytopeSide {
  bool computed = false;
  std::string skipped_reason;
  std::vector<VertexData> vertices;
  StructuralFlags flags;
  std::optional<DelzantResult> delzant;
  FanoResult fano;
  std::optional<std::size_t> connectivity;
};

struct QuadricSide {
  QuadricFlags flags;
  std::size_t column_classes = 0;
  std::size_t class_vertices = 0;
  EmbeddingResult embedding;
};

struct LagrangianReport {
  Input input;
  PolytopePresentation polytope;  // the input, or recovered from the quadrics; empty past the facet limit
  QuadricSystem quadrics;         // the input, or the Gale dual of the polytope
  PolytopeSide polytope_side;
  QuadricSide quadric_side;
  LatticeData lattice;
  MaslovReport maslov;
  TopologyExpr fiber;
  FibrationDescriptor fibration;
  IsotopyVerdict isotopy;
  std::optional<NumericSummary> numeric;
  std::vector<std::string> diagnostics;

  [[nodiscard]] bool embedded() const { return quadric_side.embedding.embedded; }
  [[nodiscard]] std::optional<bool> delzant() const;
  [[nodiscard]] std::optional<Rational> fano_c() const;
  [[nodiscard]] const std::optional<Rational>& monotone_c() const { return maslov.mono_c; }
  [[nodiscard]] std::size_t ambient_dim() const { return quadrics.variables(); }
};

/// Full pipeline. Throws ErrorKind::Structural for empty, unbounded, singular
/// or redundant input and ErrorKind::Invariant when independent verdicts disagree.
[[nodiscard]] LagrangianReport check(const Input& input, const CheckOptions& opt = {});

/// Quadric input with a known polytope for the polytope side; the two must be
/// Gale dual to each other.
[[nodiscard]] LagrangianReport check_pair(const QuadricSystem& q, const PolytopePresentation& p,
                                          const CheckOptions& opt = {});

[[nodiscard]] IsotopyInput isotopy_input(const LagrangianReport& r, std::string label);

[[nodiscard]] IsotopyVerdict pigeonhole_report(const std::vector<LagrangianReport>& family);

/// Human-readable total space, e.g. "#_5(S^3 × S^{10}) × T^3" for a trivial bundle.
[[nodiscard]] std::string render_total_space(const LagrangianReport& r);

}  // namespace lagrangelab
