#include "oracles.hpp"

#include "lagrangelab/combinations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace oracle {

Rational cofactor_det(const RatRows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    RatRows minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Rational term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

Integer cofactor_det(const IntMatrix& m) {
  RatRows r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rational(m(i, j));
  return lagrangelab::numerator(cofactor_det(r));
}

GaussResult gauss_solve(const RatRows& m, const RatVector& v) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  RatRows a = m;
  RatVector b = v;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  GaussResult out;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return out;
  out.consistent = true;
  out.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.particular[pivot_col[i]] = b[i];
  out.nullity = cols - r;
  return out;
}

Integer column_lattice_covolume(const IntMatrix& a) {
  const std::size_t k = a.rows();
  Integer g = 0;
  lagrangelab::for_each_combination(a.cols(), k, [&](const std::vector<std::size_t>& s) {
    g = lagrangelab::gcd(g, cofactor_det(a.select_cols(s)));
    return true;
  });
  return g < 0 ? Integer(-g) : g;
}

namespace {

Rational slack(const PolytopePresentation& p, std::size_t i, const RatVector& x) {
  Rational s = p.offsets[i];
  for (std::size_t r = 0; r < p.dim(); ++r) s += Rational(p.normals(r, i)) * x[r];
  return s;
}

}  // namespace

std::vector<BruteVertex> brute_vertices(const PolytopePresentation& p) {
  const std::size_t k = p.dim(), n = p.facets();
  std::map<RatVector, std::vector<std::size_t>> found;
  lagrangelab::for_each_combination(n, k, [&](const std::vector<std::size_t>& s) {
    RatRows m;
    RatVector rhs;
    for (auto i : s) {
      std::vector<Rational> row;
      for (std::size_t r = 0; r < k; ++r) row.push_back(Rational(p.normals(r, i)));
      m.push_back(std::move(row));
      rhs.push_back(-p.offsets[i]);
    }
    if (cofactor_det(m) == 0) return true;
    GaussResult g = gauss_solve(m, rhs);
    for (std::size_t i = 0; i < n; ++i)
      if (slack(p, i, g.particular) < 0) return true;
    found.emplace(g.particular, std::vector<std::size_t>{});
    return true;
  });
  std::vector<BruteVertex> out;
  for (auto& [x, unused] : found) {
    BruteVertex v{x, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (slack(p, i, x) == 0) v.active.push_back(i);
    out.push_back(std::move(v));
  }
  return out;
}

bool brute_delzant(const PolytopePresentation& p) {
  const Integer cov = column_lattice_covolume(p.normals);
  for (const auto& v : brute_vertices(p)) {
    if (v.active.size() != p.dim()) return false;
    Integer d = cofactor_det(p.normals.select_cols(v.active));
    if (d < 0) d = -d;
    if (d != cov) return false;
  }
  return true;
}

std::optional<Rational> brute_fano(const PolytopePresentation& p) {
  const std::size_t k = p.dim(), n = p.facets();
  for (std::size_t i = 0; i < n; ++i) {
    Integer g = 0;
    for (std::size_t r = 0; r < k; ++r) g = lagrangelab::gcd(g, p.normals(r, i));
    if (g != 1 && g != -1) return std::nullopt;
  }
  // Unknowns (v_1..v_k, c):  <a_i, v> - c = -b_i.
  RatRows m;
  RatVector rhs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row;
    for (std::size_t r = 0; r < k; ++r) row.push_back(Rational(p.normals(r, i)));
    row.push_back(Rational(-1));
    m.push_back(std::move(row));
    rhs.push_back(-p.offsets[i]);
  }
  GaussResult g = gauss_solve(m, rhs);
  if (!g.consistent || g.nullity != 0) return std::nullopt;
  Rational c = g.particular[k];
  if (c <= 0) return std::nullopt;
  return c;
}

std::optional<Rational> brute_monotone(const QuadricSystem& q) {
  std::optional<Rational> c;
  for (std::size_t r = 0; r < q.equations(); ++r) {
    Integer t = 0;
    for (std::size_t j = 0; j < q.variables(); ++j) t += q.gamma(r, j);
    if (t == 0) {
      if (q.delta[r] != 0) return std::nullopt;
      continue;
    }
    Rational ratio = q.delta[r] / Rational(t);
    if (c && *c != ratio) return std::nullopt;
    c = ratio;
  }
  if (!c || *c <= 0) return std::nullopt;
  return c;
}

Integer parallelepiped_points(const IntMatrix& rows) {
  const std::size_t d = rows.rows();
  std::vector<long> lo(d, 0), hi(d, 0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      long v = rows(r, c).convert_to<long>();
      (v < 0 ? lo[c] : hi[c]) += v;
    }
  RatRows mt(d, std::vector<Rational>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) mt[c][r] = Rational(rows(r, c));
  Integer count = 0;
  std::vector<long> x(lo);
  while (true) {
    RatVector xv;
    for (long v : x) xv.push_back(Rational(v));
    GaussResult g = gauss_solve(mt, xv);
    bool inside = g.consistent;
    for (std::size_t i = 0; inside && i < d; ++i)
      if (g.particular[i] < 0 || g.particular[i] >= 1) inside = false;
    if (inside) ++count;
    std::size_t i = 0;
    while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == d) break;
    ++x[i];
  }
  return count;
}

namespace {

struct R {
  long x, y;
  unsigned mask;
};

bool lower_half(const R& r) { return r.y < 0 || (r.y == 0 && r.x < 0); }
long cross(long ax, long ay, long bx, long by) { return ax * by - ay * bx; }

bool by_angle(const R& a, const R& b) {
  if (lower_half(a) != lower_half(b)) return !lower_half(a);
  return cross(a.x, a.y, b.x, b.y) > 0;
}

using State = std::vector<std::tuple<long, long, unsigned>>;

State key(const std::vector<R>& rs) {
  State s;
  for (const auto& r : rs) s.emplace_back(r.x, r.y, r.mask);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<unsigned> rotate_min(const std::vector<unsigned>& v) {
  std::vector<unsigned> best = v;
  for (std::size_t s = 1; s < v.size(); ++s) {
    std::vector<unsigned> w(v.begin() + static_cast<long>(s), v.end());
    w.insert(w.end(), v.begin(), v.begin() + static_cast<long>(s));
    best = std::min(best, w);
  }
  return best;
}

void explore(std::vector<R> rs, std::set<State>& seen, std::set<std::vector<unsigned>>& finals) {
  if (!seen.insert(key(rs)).second) return;
  std::sort(rs.begin(), rs.end(), by_angle);
  const std::size_t m = rs.size();
  bool any = false;
  for (std::size_t i = 0; m >= 2 && i < m; ++i) {
    const R& a = rs[i];
    const R& b = rs[(i + 1) % m];
    if (cross(a.x, a.y, b.x, b.y) <= 0) continue;
    bool blocked = false;
    for (std::size_t c = 0; c < m && !blocked; ++c) {
      if (c == i || c == (i + 1) % m) continue;
      long nx = -rs[c].x, ny = -rs[c].y;
      if (cross(a.x, a.y, nx, ny) > 0 && cross(nx, ny, b.x, b.y) > 0) blocked = true;
    }
    if (blocked) continue;
    any = true;
    long sx = a.x + b.x, sy = a.y + b.y;
    long g = std::gcd(sx, sy);
    std::vector<R> next;
    for (std::size_t c = 0; c < m; ++c)
      if (c != i && c != (i + 1) % m) next.push_back(rs[c]);
    next.push_back({sx / g, sy / g, a.mask | b.mask});
    explore(std::move(next), seen, finals);
  }
  if (!any) {
    std::vector<unsigned> masks;
    for (const auto& r : rs) masks.push_back(r.mask);
    finals.insert(rotate_min(masks));
  }
}

}  // namespace

MergeOutcome exhaustive_merges(const std::vector<std::pair<long, long>>& directions) {
  std::vector<R> rs;
  for (std::size_t i = 0; i < directions.size(); ++i)
    rs.push_back({directions[i].first, directions[i].second, 1u << i});
  std::set<State> seen;
  std::set<std::vector<unsigned>> finals;
  explore(rs, seen, finals);
  return {{finals.begin(), finals.end()}};
}

std::vector<std::size_t> min_rotation(std::vector<std::size_t> v) {
  std::vector<std::size_t> best = v;
  for (std::size_t s = 1; s < v.size(); ++s) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    best = std::min(best, v);
  }
  return best;
}

std::vector<std::size_t> cyclic_multiplicities(const std::vector<unsigned>& masks, const std::vector<std::size_t>& mult) {
  std::vector<std::size_t> out;
  for (unsigned m : masks) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (m & (1u << i)) s += mult[i];
    out.push_back(s);
  }
  return min_rotation(out);
}

}  // namespace oracle
