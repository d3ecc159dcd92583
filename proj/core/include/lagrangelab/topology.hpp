#pragma once

#include "lagrangelab/gale.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lagrangelab {

/// Symbolic manifold expression.
struct TopologyExpr {
  enum class Kind { Sphere, Torus, SurfaceGenus, Product, ConnSum, Disjoint, Unknown };

  Kind kind = Kind::Unknown;
  Integer value;                    // sphere/torus dimension, genus, or Disjoint copies
  std::vector<TopologyExpr> parts;  // Product factors, ConnSum summands, Disjoint body
  std::vector<Integer> counts;      // ConnSum: copies of each summand
  std::string reason;               // Unknown only

  static TopologyExpr sphere(long d);
  static TopologyExpr torus(long m);
  static TopologyExpr surface(Integer genus);
  static TopologyExpr product(std::vector<TopologyExpr> factors);
  static TopologyExpr conn_sum(std::vector<std::pair<TopologyExpr, Integer>> summands);
  static TopologyExpr disjoint(Integer copies, TopologyExpr body);
  static TopologyExpr unknown(std::string reason);

  friend bool operator==(const TopologyExpr&, const TopologyExpr&) = default;
};

/// Flattens, merges repeated summands, sorts factors and summands, and
/// rewrites connected sums of surfaces as a single SurfaceGenus.
[[nodiscard]] TopologyExpr canonicalize(const TopologyExpr& e);

/// Dimension, or nullopt for Unknown.
[[nodiscard]] std::optional<long> dimension(const TopologyExpr& e);

/// Notation such as "#_5(S^3 × S^{10})" or "Σ_5".
[[nodiscard]] std::string render(const TopologyExpr& e);

struct FiberContext {
  bool bounded = false;
  bool smooth = false;
  bool connected = false;
  std::optional<std::size_t> connectivity;  // attached to Unknown answers when known
};

[[nodiscard]] TopologyExpr classify_fiber(const QuadricSystem& q, const FiberContext& ctx);

struct LambdaClass {
  std::pair<Rational, Rational> lambda;
  std::size_t multiplicity = 0;
};

struct ThreeQuadricConfig {
  std::vector<LambdaClass> points;
  bool regular = false;
};

/// Throws ErrorKind::Structural when no positive combination exists or the
/// configuration is not regular.
[[nodiscard]] ThreeQuadricConfig three_quadrics_normal_form(const QuadricSystem& q);

/// Regularity of a list of points (origin on no closed segment between two).
[[nodiscard]] bool is_regular(const std::vector<LambdaClass>& points);

/// A class reduced to its primitive integer direction.
struct Ray {
  Integer x, y;
  std::size_t multiplicity = 0;
};

/// Groups by direction and sorts counterclockwise starting at angle 0.
[[nodiscard]] std::vector<Ray> cyclic_rays(const std::vector<LambdaClass>& points);

/// Merge of adjacent rays i and i+1 (cyclically) is allowed.
[[nodiscard]] bool merge_allowed(const std::vector<Ray>& rays, std::size_t i);

/// Applies the merge at position i (with i+1 mod size) and returns the new list.
[[nodiscard]] std::vector<Ray> merge_at(const std::vector<Ray>& rays, std::size_t i);

/// Merges to a fixpoint, always taking the smallest eligible position.
[[nodiscard]] std::vector<Ray> merge_fixpoint(std::vector<Ray> rays);

[[nodiscard]] TopologyExpr three_quadrics_classify(const ThreeQuadricConfig& cfg);

/// Topology from a cyclic multiplicity list of odd length.
[[nodiscard]] TopologyExpr odd_cycle_topology(const std::vector<std::size_t>& mult);

[[nodiscard]] TopologyExpr truncation_rule(const TopologyExpr& r, long dim_n, long facets_k);

/// Largest j with every j facets meeting; the fiber is (j-1)-connected but not j-connected.
[[nodiscard]] std::size_t connectivity_bound(const PolytopePresentation& p,
                                             const std::vector<VertexData>& verts);

/// 1 + (m-4) 2^(m-3)
[[nodiscard]] Integer polygon_genus(long m);

}  // namespace lagrangelab
