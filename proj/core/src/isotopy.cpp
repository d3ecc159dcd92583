#include "lagrangelab/isotopy.hpp"

#include "lagrangelab/errors.hpp"

#include <algorithm>

namespace lagrangelab {

namespace {

std::optional<long> fiber_h1(const TopologyExpr& e) {
  using Kind = TopologyExpr::Kind;
  switch (e.kind) {
    case Kind::Sphere:
      if (e.value == 0) return std::nullopt;
      return e.value == 1 ? 1 : 0;
    case Kind::Torus:
      return e.value.convert_to<long>();
    case Kind::SurfaceGenus:
      return 2 * e.value.convert_to<long>();
    case Kind::Product: {
      long total = 0;
      for (const auto& f : e.parts) {
        auto r = fiber_h1(f);
        if (!r) return std::nullopt;
        total += *r;
      }
      return total;
    }
    case Kind::ConnSum: {
      long total = 0;
      for (std::size_t i = 0; i < e.parts.size(); ++i) {
        auto r = fiber_h1(e.parts[i]);
        if (!r) return std::nullopt;
        total += *r * e.counts[i].convert_to<long>();
      }
      return total;
    }
    case Kind::Disjoint:
    case Kind::Unknown:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<long> h1_mod2_rank(const TopologyExpr& fiber, std::size_t base_dim, bool trivial) {
  if (!trivial) return std::nullopt;
  auto f = fiber_h1(fiber);
  if (!f) return std::nullopt;
  return static_cast<long>(base_dim) + *f;
}

std::optional<Integer> hh_bound(long dim_l, std::optional<long> rank) {
  if (dim_l < 5) fail(ErrorKind::Input, "smooth isotopy count needs dimension at least 5");
  if (dim_l % 2 != 0) return std::nullopt;
  if (!rank) fail(ErrorKind::Input, "even dimension needs the mod 2 rank of H_1");
  Integer b = 1;
  b <<= static_cast<unsigned>(*rank);
  return b;
}

IsotopyVerdict pigeonhole_report(const std::vector<IsotopyInput>& family) {
  IsotopyVerdict v;
  if (family.empty()) {
    v.note = "empty family";
    return v;
  }
  const auto& first = family.front();
  for (const auto& m : family) {
    if (!(m.fiber == first.fiber) || m.base_dim != first.base_dim || m.trivial != first.trivial ||
        m.ambient_n != first.ambient_n) {
      fail(ErrorKind::Input, "family mixes diffeomorphism types (" + m.label + " vs " + first.label + ")");
    }
  }
  v.dim_l = static_cast<long>(first.ambient_n);
  for (const auto& m : family) v.distinct_maslov_values.push_back(m.minimal_maslov);
  std::sort(v.distinct_maslov_values.begin(), v.distinct_maslov_values.end());
  v.distinct_maslov_values.erase(std::unique(v.distinct_maslov_values.begin(), v.distinct_maslov_values.end()),
                                 v.distinct_maslov_values.end());

  bool orientable = std::all_of(family.begin(), family.end(), [](const auto& m) { return m.orientable; });
  if (!orientable) {
    v.note = "H-H inapplicable: non-orientable";
    return v;
  }
  if (v.dim_l < 5) {
    v.note = "H-H inapplicable: dimension below 5";
    return v;
  }
  v.h1_mod2_rank = h1_mod2_rank(first.fiber, first.base_dim, first.trivial);
  if (v.dim_l % 2 == 0 && !v.h1_mod2_rank) {
    v.note = "H_1(L; Z_2) unknown: bundle not known to be trivial";
    return v;
  }
  v.applicable = true;
  v.smooth_class_bound = hh_bound(v.dim_l, v.h1_mod2_rank);
  if (!v.smooth_class_bound) {
    v.note = "odd dimension: infinitely many smooth classes, no collision claimed";
    return v;
  }
  v.collision = Integer(v.distinct_maslov_values.size()) > *v.smooth_class_bound;
  v.note = v.collision ? "some pair is smoothly isotopic but not Lagrangian isotopic"
                       : "distinct values do not exceed the smooth class count";
  // The count is over embeddings; an immersed member makes the conclusion void.
  if (std::any_of(family.begin(), family.end(), [](const auto& m) { return !m.embedded; }))
    v.note += " (warning: some members are immersed, not embedded)";
  return v;
}

}  // namespace lagrangelab
