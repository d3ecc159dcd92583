#include "lagrangelab/topology.hpp"

#include "lagrangelab/combinations.hpp"
#include "lagrangelab/errors.hpp"
#include "lagrangelab/polytope.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace lagrangelab {

using Kind = TopologyExpr::Kind;

TopologyExpr TopologyExpr::sphere(long d) {
  TopologyExpr e;
  e.kind = Kind::Sphere;
  e.value = d;
  return e;
}

TopologyExpr TopologyExpr::torus(long m) {
  TopologyExpr e;
  e.kind = Kind::Torus;
  e.value = m;
  return e;
}

TopologyExpr TopologyExpr::surface(Integer genus) {
  TopologyExpr e;
  e.kind = Kind::SurfaceGenus;
  e.value = std::move(genus);
  return e;
}

TopologyExpr TopologyExpr::product(std::vector<TopologyExpr> factors) {
  if (factors.empty()) fail(ErrorKind::Input, "empty product");
  TopologyExpr e;
  e.kind = Kind::Product;
  e.parts = std::move(factors);
  return e;
}

TopologyExpr TopologyExpr::conn_sum(std::vector<std::pair<TopologyExpr, Integer>> summands) {
  if (summands.empty()) fail(ErrorKind::Input, "empty connected sum");
  TopologyExpr e;
  e.kind = Kind::ConnSum;
  for (auto& [s, c] : summands) {
    e.parts.push_back(std::move(s));
    e.counts.push_back(std::move(c));
  }
  return e;
}

TopologyExpr TopologyExpr::disjoint(Integer copies, TopologyExpr body) {
  TopologyExpr e;
  e.kind = Kind::Disjoint;
  e.value = std::move(copies);
  e.parts.push_back(std::move(body));
  return e;
}

TopologyExpr TopologyExpr::unknown(std::string reason) {
  TopologyExpr e;
  e.kind = Kind::Unknown;
  e.reason = std::move(reason);
  return e;
}

std::optional<long> dimension(const TopologyExpr& e) {
  switch (e.kind) {
    case Kind::Sphere:
    case Kind::Torus:
      return e.value.convert_to<long>();
    case Kind::SurfaceGenus:
      return 2;
    case Kind::Product: {
      long total = 0;
      for (const auto& f : e.parts) {
        auto d = dimension(f);
        if (!d) return std::nullopt;
        total += *d;
      }
      return total;
    }
    case Kind::ConnSum:
    case Kind::Disjoint:
      return dimension(e.parts.front());
    case Kind::Unknown:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::string braced(const Integer& v) {
  std::string s = to_string(v);
  return s.size() > 1 ? "{" + s + "}" : s;
}

bool expr_less(const TopologyExpr& a, const TopologyExpr& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.value != b.value) return a.value < b.value;
  return render(a) < render(b);
}

// Genus when e is a closed orientable surface.
std::optional<Integer> surface_genus(const TopologyExpr& e) {
  switch (e.kind) {
    case Kind::SurfaceGenus:
      return e.value;
    case Kind::Sphere:
      if (e.value == 2) return Integer(0);
      return std::nullopt;
    case Kind::Torus:
      if (e.value == 2) return Integer(1);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

TopologyExpr canonical_surface(const Integer& g) {
  if (g == 0) return TopologyExpr::sphere(2);
  if (g == 1) return TopologyExpr::torus(2);
  return TopologyExpr::surface(g);
}

}  // namespace

TopologyExpr canonicalize(const TopologyExpr& e) {
  switch (e.kind) {
    case Kind::Sphere:
    case Kind::Unknown:
      return e;
    case Kind::Torus:
      if (e.value == 1) return TopologyExpr::sphere(1);
      return e;
    case Kind::SurfaceGenus:
      return canonical_surface(e.value);
    case Kind::Disjoint: {
      TopologyExpr body = canonicalize(e.parts.front());
      if (e.value == 1) return body;
      return TopologyExpr::disjoint(e.value, std::move(body));
    }
    case Kind::Product: {
      std::vector<TopologyExpr> flat;
      long circles = 0;
      std::vector<TopologyExpr> stack;
      for (const auto& f : e.parts) stack.push_back(canonicalize(f));
      while (!stack.empty()) {
        TopologyExpr f = std::move(stack.back());
        stack.pop_back();
        if (f.kind == Kind::Product) {
          for (auto& g : f.parts) stack.push_back(std::move(g));
        } else if (f.kind == Kind::Sphere && f.value == 1) {
          ++circles;
        } else if (f.kind == Kind::Torus) {
          circles += f.value.convert_to<long>();
        } else {
          flat.push_back(std::move(f));
        }
      }
      if (circles == 1) flat.push_back(TopologyExpr::sphere(1));
      if (circles >= 2) flat.push_back(TopologyExpr::torus(circles));
      if (flat.empty()) return TopologyExpr::sphere(0);
      if (flat.size() == 1) return flat.front();
      std::sort(flat.begin(), flat.end(), expr_less);
      return TopologyExpr::product(std::move(flat));
    }
    case Kind::ConnSum: {
      std::vector<std::pair<TopologyExpr, Integer>> items;
      std::vector<std::pair<TopologyExpr, Integer>> stack;
      for (std::size_t i = 0; i < e.parts.size(); ++i) stack.emplace_back(canonicalize(e.parts[i]), e.counts[i]);
      while (!stack.empty()) {
        auto [s, c] = std::move(stack.back());
        stack.pop_back();
        if (c == 0) continue;
        if (s.kind == Kind::ConnSum) {
          for (std::size_t i = 0; i < s.parts.size(); ++i) stack.emplace_back(s.parts[i], s.counts[i] * c);
        } else {
          items.emplace_back(std::move(s), std::move(c));
        }
      }
      if (items.empty()) fail(ErrorKind::Input, "connected sum with no summands");
      // Closed surfaces add their genera.
      bool all_surfaces = true;
      Integer genus = 0;
      for (const auto& [s, c] : items) {
        auto g = surface_genus(s);
        if (!g) {
          all_surfaces = false;
          break;
        }
        genus += *g * c;
      }
      if (all_surfaces) return canonical_surface(genus);
      // Spheres of the ambient dimension are units.
      auto dim = dimension(items.front().first);
      std::vector<std::pair<TopologyExpr, Integer>> kept;
      for (auto& it : items)
        if (!(it.first.kind == Kind::Sphere && dim && it.first.value == *dim)) kept.push_back(std::move(it));
      if (kept.empty()) return TopologyExpr::sphere(*dim);
      std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return expr_less(a.first, b.first); });
      std::vector<std::pair<TopologyExpr, Integer>> merged;
      for (auto& it : kept) {
        if (!merged.empty() && merged.back().first == it.first) {
          merged.back().second += it.second;
        } else {
          merged.push_back(std::move(it));
        }
      }
      if (merged.size() == 1 && merged.front().second == 1) return merged.front().first;
      return TopologyExpr::conn_sum(std::move(merged));
    }
  }
  return e;
}

std::string render(const TopologyExpr& e) {
  switch (e.kind) {
    case Kind::Sphere:
      return "S^" + braced(e.value);
    case Kind::Torus:
      return "T^" + braced(e.value);
    case Kind::SurfaceGenus:
      return "Σ_" + braced(e.value);
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (i) out += " × ";
        const auto& f = e.parts[i];
        bool paren = (f.kind == Kind::ConnSum && (f.parts.size() > 1 || f.counts[0] == 1)) ||
                     f.kind == Kind::Disjoint;
        out += paren ? "(" + render(f) + ")" : render(f);
      }
      return out;
    }
    case Kind::ConnSum: {
      std::string out;
      for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (i) out += " # ";
        const auto& s = e.parts[i];
        if (e.counts[i] == 1) {
          out += s.kind == Kind::Product ? "(" + render(s) + ")" : render(s);
        } else {
          out += "#_" + braced(e.counts[i]) + "(" + render(s) + ")";
        }
      }
      return out;
    }
    case Kind::Disjoint:
      return "⊔_" + braced(e.value) + "(" + render(e.parts.front()) + ")";
    case Kind::Unknown:
      return "Unknown(" + e.reason + ")";
  }
  return {};
}

Integer polygon_genus(long m) {
  if (m < 3) fail(ErrorKind::Input, "a polygon has at least 3 edges");
  Integer p = 1;
  p <<= static_cast<unsigned>(m - 3);
  return 1 + Integer(m - 4) * p;
}

namespace {

// Row r' = (w delta) r - (r delta) (w Gamma) restricted to column j.
Rational homogenized(const QuadricSystem& q, std::size_t row, std::size_t j,
                     const Rational& w_delta, const Rational& w_gamma_j) {
  return w_delta * Rational(q.gamma(row, j)) - q.delta[row] * w_gamma_j;
}

RatVector row_combination(const QuadricSystem& q, const RatVector& w) {
  RatVector out(q.variables());
  for (std::size_t j = 0; j < q.variables(); ++j)
    for (std::size_t r = 0; r < q.equations(); ++r) out[j] += w[r] * Rational(q.gamma(r, j));
  return out;
}

RatVector positive_row(const QuadricSystem& q) {
  auto w = positive_row_combination(column_classes(q.gamma).vectors);
  if (!w) fail(ErrorKind::Structural, "no positive combination of the quadrics: the fiber is not compact");
  return *w;
}

}  // namespace

TopologyExpr classify_fiber(const QuadricSystem& q, const FiberContext& ctx) {
  validate(q);
  if (!ctx.bounded || !ctx.smooth || !ctx.connected)
    fail(ErrorKind::Structural, "fiber classification needs a bounded, generic, irredundant system");
  const long d = static_cast<long>(q.equations());
  const long n = static_cast<long>(q.variables());
  const long k = n - d;

  if (d == 1) return TopologyExpr::sphere(n - 1);
  if (k == 2) {
    if (n == 4) return TopologyExpr::torus(2);
    return canonicalize(TopologyExpr::surface(polygon_genus(n)));
  }
  if (d == 2) {
    RatVector w = positive_row(q);
    std::size_t row = w[1] != 0 ? 0 : 1;
    Rational w_delta = dot(w, q.delta);
    RatVector wg = row_combination(q, w);
    long pos = 0;
    for (long j = 0; j < n; ++j) {
      int s = sign(homogenized(q, row, static_cast<std::size_t>(j), w_delta, wg[static_cast<std::size_t>(j)]));
      if (s == 0) fail(ErrorKind::Structural, "two-quadric system is singular");
      if (s > 0) ++pos;
    }
    if (pos == 0 || pos == n) fail(ErrorKind::Structural, "two-quadric system is empty");
    return canonicalize(TopologyExpr::product({TopologyExpr::sphere(pos - 1), TopologyExpr::sphere(n - pos - 1)}));
  }
  if (d == 3) return three_quadrics_classify(three_quadrics_normal_form(q));

  std::string reason = "no classification for " + std::to_string(d) + " quadrics";
  if (ctx.connectivity) {
    reason += "; " + std::to_string(static_cast<long>(*ctx.connectivity) - 1) + "-connected, not " +
              std::to_string(*ctx.connectivity) + "-connected";
  }
  return TopologyExpr::unknown(reason);
}

bool is_regular(const std::vector<LambdaClass>& points) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    const auto& [ax, ay] = points[a].lambda;
    if (ax == 0 && ay == 0) return false;
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const auto& [bx, by] = points[b].lambda;
      if (ax * by - ay * bx == 0 && ax * bx + ay * by <= 0) return false;
    }
  }
  return true;
}

ThreeQuadricConfig three_quadrics_normal_form(const QuadricSystem& q) {
  validate(q);
  if (q.equations() != 3) fail(ErrorKind::Input, "three_quadrics_normal_form needs exactly three quadrics");
  RatVector w = positive_row(q);
  // Complete w to a basis with two of the original rows.
  std::size_t r1 = 0, r2 = 1;
  if (w[2] == 0) {
    if (w[1] != 0) {
      r2 = 2;
    } else {
      r1 = 1;
      r2 = 2;
    }
  }
  Rational w_delta = dot(w, q.delta);
  RatVector wg = row_combination(q, w);

  ThreeQuadricConfig cfg;
  std::map<std::pair<Rational, Rational>, std::size_t> index;
  for (std::size_t j = 0; j < q.variables(); ++j) {
    std::pair<Rational, Rational> lam{homogenized(q, r1, j, w_delta, wg[j]) / wg[j],
                                      homogenized(q, r2, j, w_delta, wg[j]) / wg[j]};
    auto [it, inserted] = index.emplace(lam, cfg.points.size());
    if (inserted) cfg.points.push_back({lam, 0});
    ++cfg.points[it->second].multiplicity;
  }
  cfg.regular = is_regular(cfg.points);
  if (!cfg.regular) fail(ErrorKind::Structural, "three-quadric configuration is not regular");
  return cfg;
}

namespace {

int half(const Ray& r) { return (r.y > 0 || (r.y == 0 && r.x > 0)) ? 0 : 1; }

Integer cross(const Integer& ax, const Integer& ay, const Integer& bx, const Integer& by) {
  return ax * by - ay * bx;
}

bool angle_less(const Ray& a, const Ray& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a.x, a.y, b.x, b.y) > 0;
}

Ray primitive_ray(Integer x, Integer y, std::size_t mult) {
  Integer g = gcd(x, y);
  if (g < 0) g = -g;
  return {x / g, y / g, mult};
}

std::vector<Ray> sorted_grouped(std::vector<Ray> rays) {
  std::sort(rays.begin(), rays.end(), angle_less);
  std::vector<Ray> out;
  for (auto& r : rays) {
    if (!out.empty() && out.back().x == r.x && out.back().y == r.y) {
      out.back().multiplicity += r.multiplicity;
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::vector<Ray> cyclic_rays(const std::vector<LambdaClass>& points) {
  std::vector<Ray> rays;
  for (const auto& p : points) {
    Integer den = lcm(denominator(p.lambda.first), denominator(p.lambda.second));
    Integer x = numerator(p.lambda.first * Rational(den));
    Integer y = numerator(p.lambda.second * Rational(den));
    if (x == 0 && y == 0) fail(ErrorKind::Structural, "a class sits at the origin");
    rays.push_back(primitive_ray(x, y, p.multiplicity));
  }
  return sorted_grouped(std::move(rays));
}

bool merge_allowed(const std::vector<Ray>& rays, std::size_t i) {
  const std::size_t m = rays.size();
  if (m < 2) return false;
  const Ray& a = rays[i];
  const Ray& b = rays[(i + 1) % m];
  if (cross(a.x, a.y, b.x, b.y) <= 0) return false;  // sector must be narrower than a half-turn
  for (std::size_t c = 0; c < m; ++c) {
    if (c == i || c == (i + 1) % m) continue;
    Integer nx = -rays[c].x, ny = -rays[c].y;
    if (cross(a.x, a.y, nx, ny) > 0 && cross(nx, ny, b.x, b.y) > 0) return false;
  }
  return true;
}

std::vector<Ray> merge_at(const std::vector<Ray>& rays, std::size_t i) {
  const std::size_t m = rays.size();
  const std::size_t j = (i + 1) % m;
  std::vector<Ray> out;
  for (std::size_t c = 0; c < m; ++c)
    if (c != i && c != j) out.push_back(rays[c]);
  out.push_back(primitive_ray(rays[i].x + rays[j].x, rays[i].y + rays[j].y,
                              rays[i].multiplicity + rays[j].multiplicity));
  return sorted_grouped(std::move(out));
}

std::vector<Ray> merge_fixpoint(std::vector<Ray> rays) {
  while (true) {
    bool merged = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (merge_allowed(rays, i)) {
        rays = merge_at(rays, i);
        merged = true;
        break;
      }
    }
    if (!merged) return rays;
  }
}

TopologyExpr odd_cycle_topology(const std::vector<std::size_t>& mult) {
  const std::size_t m = mult.size();
  if (m % 2 == 0) fail(ErrorKind::Invariant, "merge fixpoint has an even number of classes");
  if (m == 1) fail(ErrorKind::Structural, "all classes point the same way: the fiber is empty");
  const std::size_t l = (m - 1) / 2;
  long n = 0;
  for (auto x : mult) n += static_cast<long>(x);
  if (l == 1) {
    return canonicalize(TopologyExpr::product({TopologyExpr::sphere(static_cast<long>(mult[0]) - 1),
                                               TopologyExpr::sphere(static_cast<long>(mult[1]) - 1),
                                               TopologyExpr::sphere(static_cast<long>(mult[2]) - 1)}));
  }
  std::vector<std::pair<TopologyExpr, Integer>> summands;
  for (std::size_t i = 0; i < m; ++i) {
    long di = 0;
    for (std::size_t s = 0; s < l; ++s) di += static_cast<long>(mult[(i + s) % m]);
    summands.emplace_back(TopologyExpr::product({TopologyExpr::sphere(di - 1), TopologyExpr::sphere(n - di - 2)}),
                          Integer(1));
  }
  return canonicalize(TopologyExpr::conn_sum(std::move(summands)));
}

TopologyExpr three_quadrics_classify(const ThreeQuadricConfig& cfg) {
  if (!cfg.regular) fail(ErrorKind::Structural, "three-quadric configuration is not regular");
  std::vector<Ray> rays = merge_fixpoint(cyclic_rays(cfg.points));
  if (rays.size() % 2 == 0) {
    std::ostringstream os;
    os << "merge fixpoint has " << rays.size() << " classes:";
    for (const auto& r : rays) os << " (" << r.x << "," << r.y << ")x" << r.multiplicity;
    fail(ErrorKind::Invariant, os.str());
  }
  std::vector<std::size_t> mult;
  for (const auto& r : rays) mult.push_back(r.multiplicity);
  return odd_cycle_topology(mult);
}

TopologyExpr truncation_rule(const TopologyExpr& r, long dim_n, long facets_k) {
  if (dim_n < 2 || facets_k <= dim_n) fail(ErrorKind::Input, "truncation needs n >= 2 and k > n");
  Integer copies = 1;
  copies <<= static_cast<unsigned>(facets_k - dim_n);
  copies -= 1;
  std::vector<std::pair<TopologyExpr, Integer>> parts;
  parts.emplace_back(r, Integer(2));
  if (copies > 0)
    parts.emplace_back(TopologyExpr::product({TopologyExpr::sphere(1), TopologyExpr::sphere(dim_n - 1)}), copies);
  return canonicalize(TopologyExpr::conn_sum(std::move(parts)));
}

std::size_t connectivity_bound(const PolytopePresentation& p, const std::vector<VertexData>& verts) {
  const std::size_t n = p.facets();
  std::vector<boost::dynamic_bitset<>> act;
  for (const auto& v : verts) {
    boost::dynamic_bitset<> b(n);
    for (auto i : v.active) b.set(i);
    act.push_back(std::move(b));
  }
  constexpr std::uint64_t budget = 20'000'000;
  std::uint64_t spent = 0;
  for (std::size_t s = 1; s <= n; ++s) {
    spent += binomial(n, s);
    if (spent > budget) fail(ErrorKind::TooLarge, "connectivity bound needs too many facet subsets");
    bool all_meet = true;
    for_each_combination(n, s, [&](const std::vector<std::size_t>& sub) {
      boost::dynamic_bitset<> b(n);
      for (auto i : sub) b.set(i);
      bool covered = std::any_of(act.begin(), act.end(), [&](const auto& a) { return b.is_subset_of(a); });
      if (!covered) all_meet = false;
      return covered;
    });
    if (!all_meet) return s - 1;
  }
  return n;
}

}  // namespace lagrangelab
