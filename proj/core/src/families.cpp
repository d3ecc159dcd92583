#include "lagrangelab/families.hpp"

#include "lagrangelab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <sstream>
#include <thread>

namespace lagrangelab {

namespace {

long parse_long(std::string_view s, const std::string& token) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorKind::Input, "bad integer '" + std::string(s) + "' in '" + token + "'");
  return v;
}

std::vector<std::string> split_ws(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    std::istringstream is(t);
    std::string w;
    while (is >> w) out.push_back(w);
  }
  return out;
}

}  // namespace

ParamGrid parse_grid(const std::vector<std::string>& tokens) {
  ParamGrid g;
  for (const auto& tok : split_ws(tokens)) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) fail(ErrorKind::Input, "expected name=values, got '" + tok + "'");
    std::string name = tok.substr(0, eq);
    std::vector<long> values;
    std::string rest = tok.substr(eq + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty()) fail(ErrorKind::Input, "empty value in '" + tok + "'");
      auto dots = item.find("..");
      if (dots == std::string::npos) {
        values.push_back(parse_long(item, tok));
      } else {
        std::string hi_part = item.substr(dots + 2);
        long step = 1;
        if (auto colon = hi_part.find(':'); colon != std::string::npos) {
          step = parse_long(std::string_view(hi_part).substr(colon + 1), tok);
          hi_part = hi_part.substr(0, colon);
        }
        long lo = parse_long(std::string_view(item).substr(0, dots), tok);
        long hi = parse_long(hi_part, tok);
        if (step <= 0) fail(ErrorKind::Input, "range step must be positive in '" + tok + "'");
        for (long v = lo; v <= hi; v += step) values.push_back(v);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    auto it = std::find_if(g.axes.begin(), g.axes.end(), [&](const auto& a) { return a.first == name; });
    if (it != g.axes.end()) fail(ErrorKind::Input, "parameter '" + name + "' given twice");
    g.axes.emplace_back(std::move(name), std::move(values));
  }
  return g;
}

std::vector<ParamPoint> expand(const ParamGrid& grid) {
  std::vector<ParamPoint> out{ParamPoint{}};
  for (const auto& [name, values] : grid.axes) {
    std::vector<ParamPoint> next;
    for (const auto& p : out)
      for (long v : values) {
        ParamPoint q = p;
        q[name] = v;
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

std::string format_params(const ParamPoint& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ' ';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = {
      {"ex1", {"k", "p", "n"}, "two quadrics, fiber S^{p-1} x S^{n-p-1}, N = gcd(p, n-p+k)"},
      {"ex2", {"q", "l", "k", "p", "n"}, "three quadrics over a product of simplices, N = gcd(n-p+l, l+q-k, p-k+q)"},
      {"th3", {}, "the pentagon, fiber of genus 5, N = 1"},
      {"th4", {"p", "q"}, "three quadrics, fiber #_5(S^{2p-1} x S^{3p-2}), N = gcd(p, q)"},
      {"th5", {}, "the hexagon, fiber of genus 17, N = 1"},
      {"th6", {"k"}, "non-Delzant pentagon, immersed, N = k"},
      {"sphere", {"g", "n"}, "one quadric g u_1^2 + u_2^2 + ... + u_{2n}^2, N = g + 2n - 1"},
  };
  return catalog;
}

namespace {

const FamilyInfo& info(const std::string& family) {
  for (const auto& f : family_catalog())
    if (f.id == family) return f;
  fail(ErrorKind::Input, "unknown family '" + family + "'");
}

long get(const ParamPoint& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) fail(ErrorKind::Input, "missing parameter '" + name + "'");
  return it->second;
}

// Columns given as (vector, count) runs.
QuadricSystem from_runs(const std::vector<std::pair<std::vector<long>, long>>& runs, std::vector<long> delta) {
  std::size_t rows = delta.size();
  std::size_t n = 0;
  for (const auto& r : runs) n += static_cast<std::size_t>(r.second);
  QuadricSystem q;
  q.gamma = IntMatrix(rows, n);
  std::size_t j = 0;
  for (const auto& [v, count] : runs)
    for (long c = 0; c < count; ++c, ++j)
      for (std::size_t r = 0; r < rows; ++r) q.gamma(r, j) = v[r];
  for (long d : delta) q.delta.emplace_back(d);
  return q;
}

PolytopePresentation polytope(std::size_t k, const std::vector<std::vector<long>>& normals,
                              const std::vector<long>& offsets) {
  PolytopePresentation p;
  p.normals = IntMatrix(k, normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t r = 0; r < k; ++r) p.normals(r, i) = normals[i][r];
  for (long b : offsets) p.offsets.emplace_back(b);
  return p;
}

PolytopePresentation pentagon_polytope() {
  return polytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}}, {1, 1, 1, 1, 1});
}

Integer igcd(std::initializer_list<long> xs) {
  Integer g = 0;
  for (long x : xs) g = gcd(g, Integer(x));
  return abs(g);
}

TopologyExpr sphere_product(std::initializer_list<long> dims) {
  std::vector<TopologyExpr> f;
  for (long d : dims) f.push_back(TopologyExpr::sphere(d));
  return canonicalize(TopologyExpr::product(std::move(f)));
}

}  // namespace

std::vector<std::string> constraint_violations(const std::string& family, const ParamPoint& p) {
  const auto& fi = info(family);
  std::vector<std::string> bad;
  for (const auto& name : fi.params)
    if (!p.count(name)) bad.push_back("missing parameter " + name);
  for (const auto& [name, v] : p)
    if (std::find(fi.params.begin(), fi.params.end(), name) == fi.params.end() && !(family == "sphere" && name == "d"))
      bad.push_back("unknown parameter " + name);
  if (!bad.empty()) return bad;
  auto need = [&](bool ok, const char* text) {
    if (!ok) bad.emplace_back(text);
  };
  if (family == "ex1") {
    long k = p.at("k"), pp = p.at("p"), n = p.at("n");
    need(n - pp + k > pp, "n-p+k > p");
    need(k < pp - 1, "k < p-1");
    need(k >= 0, "k >= 0");
    need(n - pp >= 1, "n-p >= 1");
  } else if (family == "ex2") {
    long q = p.at("q"), l = p.at("l"), k = p.at("k"), pp = p.at("p"), n = p.at("n");
    need(q >= 1, "q >= 1");
    // l = k is allowed: the (0,1,0) run is empty but the system stays valid.
    need(q < l && l <= k && k < pp && pp < n, "q < l <= k < p < n");
    need(k - l - q < 0, "k-l-q < 0");
    need(n - pp + k - q < pp - l, "n-p+k-q < p-l");
  } else if (family == "th4") {
    long pp = p.at("p"), q = p.at("q");
    need(pp >= 2, "p >= 2");
    need(q > 0 && q <= pp, "0 < q <= p");
  } else if (family == "th6") {
    need(p.at("k") >= 4, "k >= 4");
  } else if (family == "sphere") {
    need(p.at("g") >= 1, "g >= 1");
    need(p.at("n") >= 1, "n >= 1");
    if (p.count("d")) need(p.at("d") > 0, "d > 0");
  }
  return bad;
}

FamilyInstance make_instance(const std::string& family, const ParamPoint& p) {
  auto bad = constraint_violations(family, p);
  if (!bad.empty()) {
    std::string msg = family + " " + format_params(p) + " violates:";
    for (const auto& b : bad) msg += " [" + b + "]";
    fail(ErrorKind::Input, msg);
  }
  FamilyInstance inst;
  inst.family = family;
  inst.params = p;
  if (family == "ex1") {
    long k = get(p, "k"), pp = get(p, "p"), n = get(p, "n");
    inst.quadrics = from_runs({{{1, 1}, k}, {{1, 0}, pp - k}, {{0, 1}, n - pp}}, {pp, n - pp + k});
    // Facets: x_i >= -1 (i < p), the first simplex facet, x_i >= -1 (p <= i <= n-2), the tilted facet.
    const std::size_t dim = static_cast<std::size_t>(n - 2);
    std::vector<std::vector<long>> normals;
    for (long i = 1; i <= pp - 1; ++i) {
      std::vector<long> a(dim, 0);
      a[static_cast<std::size_t>(i - 1)] = 1;
      normals.push_back(a);
    }
    std::vector<long> s1(dim, 0);
    for (long i = 1; i <= pp - 1; ++i) s1[static_cast<std::size_t>(i - 1)] = -1;
    normals.push_back(s1);
    for (long i = pp; i <= n - 2; ++i) {
      std::vector<long> a(dim, 0);
      a[static_cast<std::size_t>(i - 1)] = 1;
      normals.push_back(a);
    }
    std::vector<long> s2(dim, 0);
    for (long i = 1; i <= k; ++i) s2[static_cast<std::size_t>(i - 1)] = -1;
    for (long i = pp; i <= n - 2; ++i) s2[static_cast<std::size_t>(i - 1)] = -1;
    normals.push_back(s2);
    inst.polytope = polytope(dim, normals, std::vector<long>(static_cast<std::size_t>(n), 1));
    inst.expected_minimal_maslov = igcd({pp, n - pp + k});
    inst.expected_orientable = pp % 2 == 0 && (n - pp + k) % 2 == 0;
    inst.expected_embedded = true;
    inst.expected_fiber = sphere_product({pp - 1, n - pp - 1});
  } else if (family == "ex2") {
    long q = get(p, "q"), l = get(p, "l"), k = get(p, "k"), pp = get(p, "p"), n = get(p, "n");
    inst.quadrics = from_runs({{{1, -1, 1}, q}, {{1, 0, 0}, l - q}, {{0, 1, 0}, k - l}, {{0, 0, 1}, pp - k},
                               {{1, 0, 0}, n - pp}},
                              {n - pp + l, k - l - q, pp - k + q});
    inst.expected_minimal_maslov = igcd({n - pp + l, l + q - k, pp - k + q});
    inst.expected_orientable = (n - pp + l) % 2 == 0 && (k - l + q) % 2 == 0 && (pp - k + q) % 2 == 0;
    inst.expected_embedded = true;
    inst.expected_fiber = sphere_product({n - pp + k - q - 1, pp - k - 1, q - 1});
  } else if (family == "th3") {
    inst.quadrics = from_runs({{{1, 0, 1}, 1}, {{0, 1, 1}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}},
                              {2, 2, 3});
    inst.polytope = pentagon_polytope();
    inst.expected_minimal_maslov = 1;
    inst.expected_orientable = false;
    inst.expected_embedded = true;
    inst.expected_fiber = TopologyExpr::surface(5);
  } else if (family == "th5") {
    inst.quadrics = from_runs({{{1, 0, 1, 1}, 1}, {{0, 1, 1, 1}, 1}, {{1, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 1},
                               {{0, 0, 1, 0}, 1}, {{0, 0, 0, -1}, 1}},
                              {2, 2, 3, 1});
    inst.polytope = polytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}, {1, 1}}, {1, 1, 1, 1, 1, 1});
    inst.expected_minimal_maslov = 1;
    inst.expected_orientable = false;
    inst.expected_embedded = true;
    inst.expected_fiber = TopologyExpr::surface(17);
  } else if (family == "th4") {
    long pp = get(p, "p"), q = get(p, "q");
    inst.quadrics = from_runs({{{1, 0, 1}, pp}, {{0, 1, 1}, pp}, {{1, 1, 0}, q}, {{1, 0, 0}, pp - q},
                               {{0, 1, 0}, pp}, {{0, 0, 1}, pp}},
                              {2 * pp, 2 * pp + q, 3 * pp});
    inst.expected_minimal_maslov = igcd({pp, q});
    // Not asserted: the classes (1,0,1), (0,1,1), (1,1,0) meet at a vertex and
    // span an index 2 sublattice, so these are immersions.
    inst.expected_fiber = canonicalize(TopologyExpr::conn_sum({{sphere_product({2 * pp - 1, 3 * pp - 2}), Integer(5)}}));
  } else if (family == "th6") {
    long k = get(p, "k");
    inst.quadrics = from_runs({{{k - 1, 0, k - 3}, 1}, {{0, 2 * k - 1, k + 2}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 1},
                               {{0, 0, 1}, 1}},
                              {k, 2 * k, 2 * k});
    inst.polytope = polytope(2, {{1, 0}, {0, 1}, {-(k - 1), 0}, {0, -(2 * k - 1)}, {-(k - 3), -(k + 2)}},
                             {0, 0, k, 2 * k, 2 * k});
    inst.expected_minimal_maslov = k;
    inst.expected_orientable = k % 2 == 0;
    inst.expected_embedded = false;
    inst.expected_fiber = TopologyExpr::surface(5);
  } else if (family == "sphere") {
    long g = get(p, "g"), n = get(p, "n");
    long d = p.count("d") ? p.at("d") : g + 2 * n - 1;
    inst.quadrics = from_runs({{{g}, 1}, {{1}, 2 * n - 1}}, {d});
    inst.expected_minimal_maslov = g + 2 * n - 1;
    inst.expected_monotone_c = Rational(d) / Rational(g + 2 * n - 1);
    inst.expected_embedded = g == 1;
    inst.expected_fiber = TopologyExpr::sphere(2 * n - 1);
  }
  return inst;
}

LagrangianReport run_instance(const FamilyInstance& inst, const CheckOptions& opt) {
  const std::string where = inst.family + " " + format_params(inst.params) + ": ";
  LagrangianReport r = (inst.polytope && inst.polytope->facets() <= opt.polytope_facet_limit)
                           ? check_pair(inst.quadrics, *inst.polytope, opt)
                           : check(inst.quadrics, opt);
  if (r.maslov.minimal_maslov != inst.expected_minimal_maslov)
    fail(ErrorKind::Invariant, where + "N = " + to_string(r.maslov.minimal_maslov) + " but the closed form gives " +
                                   to_string(inst.expected_minimal_maslov));
  if (!r.maslov.mono_c || *r.maslov.mono_c != inst.expected_monotone_c)
    fail(ErrorKind::Invariant, where + "monotonicity constant differs from " + to_string(inst.expected_monotone_c));
  if (inst.expected_orientable && r.fibration.orientable != *inst.expected_orientable)
    fail(ErrorKind::Invariant, where + "orientability differs from the parity condition");
  if (inst.expected_embedded && r.embedded() != *inst.expected_embedded)
    fail(ErrorKind::Invariant, where + "embeddedness differs from the expected verdict");
  if (inst.expected_fiber && !(r.fiber == *inst.expected_fiber))
    fail(ErrorKind::Invariant, where + "fiber " + render(r.fiber) + " differs from " + render(*inst.expected_fiber));
  return r;
}

CheckOptions family_options() {
  CheckOptions o;
  o.numeric = false;
  return o;
}

std::vector<ReproduceRow> reproduce(const std::string& family, const ParamGrid& grid, const CheckOptions& opt) {
  (void)info(family);
  std::vector<ParamPoint> points = expand(grid);
  std::string problems;
  for (const auto& p : points) {
    auto bad = constraint_violations(family, p);
    if (bad.empty()) continue;
    problems += "\n  " + format_params(p) + ":";
    for (const auto& b : bad) problems += " [" + b + "]";
  }
  if (!problems.empty()) fail(ErrorKind::Input, "parameter constraints violated:" + problems);
  std::vector<ReproduceRow> rows;
  for (const auto& p : points) rows.push_back({p, run_instance(make_instance(family, p), opt)});
  return rows;
}

ScanResult scan(const std::string& family, const ParamGrid& grid, unsigned threads, const CheckOptions& opt) {
  (void)info(family);
  ScanResult res;
  std::vector<ParamPoint> all = expand(grid);
  if (grid.axes.empty()) all.clear();
  res.points = all.size();
  std::vector<ParamPoint> points;
  for (auto& p : all) {
    if (constraint_violations(family, p).empty()) {
      points.push_back(std::move(p));
    } else {
      ++res.rejected;
    }
  }

  std::vector<std::optional<LagrangianReport>> reports(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        reports[i] = run_instance(make_instance(family, points[i]), opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Key: fiber, base dimension, ambient dimension, bundle type.
  std::map<std::tuple<std::string, std::size_t, std::size_t, std::string>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& r = *reports[i];
    groups[{render(r.fiber), r.fibration.base_torus_dim, r.ambient_dim(), to_string(r.fibration.trivial_hint)}]
        .push_back(i);
  }
  for (const auto& [key, idx] : groups) {
    ScanGroup g;
    std::tie(g.fiber, g.base_dim, g.ambient_n, g.bundle) = key;
    std::vector<IsotopyInput> in;
    for (auto i : idx) {
      g.members.push_back(points[i]);
      g.member_maslov.push_back(reports[i]->maslov.minimal_maslov);
      in.push_back(isotopy_input(*reports[i], format_params(points[i])));
    }
    g.verdict = pigeonhole_report(in);
    res.groups.push_back(std::move(g));
  }
  return res;
}

}  // namespace lagrangelab
