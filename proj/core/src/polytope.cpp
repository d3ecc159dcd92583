#include "lagrangelab/polytope.hpp"

#include "lagrangelab/combinations.hpp"
#include "lagrangelab/errors.hpp"
#include "lagrangelab/fourier_motzkin.hpp"
#include "lagrangelab/normal_forms.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace lagrangelab {

void validate(const PolytopePresentation& p) {
  const std::size_t k = p.dim();
  const std::size_t n = p.facets();
  if (k < 1) fail(ErrorKind::Input, "polytope dimension must be at least 1");
  if (n <= k) fail(ErrorKind::Input, "need more facets than the dimension");
  if (p.offsets.size() != n) fail(ErrorKind::Input, "offsets length does not match normals count");
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (std::size_t r = 0; r < k; ++r)
      if (p.normals(r, i) != 0) zero = false;
    if (zero) fail(ErrorKind::Input, "facet normal " + std::to_string(i + 1) + " is zero");
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  const Integer cap = std::numeric_limits<std::uint64_t>::max();
  Integer r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return r.convert_to<std::uint64_t>();
}

std::uint64_t enumeration_cost(const PolytopePresentation& p) {
  return std::min(binomial(p.facets(), p.dim()), binomial(p.facets(), p.facets() - p.dim()));
}

namespace {

Rational slack(const PolytopePresentation& p, std::size_t i, std::span<const Rational> x) {
  Rational s = p.offsets[i];
  for (std::size_t r = 0; r < p.dim(); ++r)
    if (p.normals(r, i) != 0) s += Rational(p.normals(r, i)) * x[r];
  return s;
}

// Returns the active set, or nullopt if x violates some facet.
std::optional<std::vector<std::size_t>> active_set(const PolytopePresentation& p,
                                                   std::span<const Rational> x) {
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < p.facets(); ++i) {
    int s = sign(slack(p, i, x));
    if (s < 0) return std::nullopt;
    if (s == 0) act.push_back(i);
  }
  return act;
}

// k facet indices whose normals are linearly independent (greedy), or empty.
std::vector<std::size_t> independent_facets(const IntMatrix& a) {
  std::vector<std::size_t> chosen;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < a.cols() && chosen.size() < a.rows(); ++i) {
    rows.push_back(a.column(i));
    if (rank(IntMatrix::from_rows(rows, a.rows())) == rows.size()) {
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  if (chosen.size() < a.rows()) chosen.clear();
  return chosen;
}

}  // namespace

std::vector<VertexData> enumerate_vertices(const PolytopePresentation& p, const EnumerationOptions& opt) {
  validate(p);
  const std::size_t k = p.dim();
  const std::size_t n = p.facets();
  std::vector<std::size_t> basis_rows = independent_facets(p.normals);
  if (basis_rows.empty()) return {};  // rank A < k: the polyhedron contains a line

  const std::uint64_t primal = binomial(n, k);
  const std::uint64_t dual = binomial(n, n - k);
  if (std::min(primal, dual) > opt.subset_cap) {
    fail(ErrorKind::TooLarge, "vertex enumeration would examine " + std::to_string(std::min(primal, dual)) +
                                  " subsets, above the cap of " + std::to_string(opt.subset_cap));
  }

  std::map<RatVector, bool> points;
  const IntMatrix at = p.normals.transpose();  // n x k, row i is a_i
  if (primal <= dual) {
    for_each_combination(n, k, [&](const std::vector<std::size_t>& s) {
      IntMatrix m = at.select_rows(s);
      RatVector rhs(k);
      for (std::size_t i = 0; i < k; ++i) rhs[i] = -p.offsets[s[i]];
      if (auto x = solve_square(m, rhs)) {
        if (active_set(p, *x)) points.emplace(std::move(*x), true);
      }
      return true;
    });
  } else {
    // Work with the slack vector s = A^T x + b, which lies in {s >= 0, Gamma s = Gamma b}.
    const IntMatrix gamma = integer_kernel(p.normals);
    const RatVector delta = multiply(gamma, p.offsets);
    const std::size_t d = n - k;
    auto inv = inverse(at.select_rows(basis_rows));
    for_each_combination(n, d, [&](const std::vector<std::size_t>& t) {
      auto u = solve_square(gamma.select_cols(t), delta);
      if (!u) return true;
      for (const auto& v : *u)
        if (v < 0) return true;
      RatVector s(n);
      for (std::size_t i = 0; i < d; ++i) s[t[i]] = (*u)[i];
      RatVector rhs(k);
      for (std::size_t i = 0; i < k; ++i) rhs[i] = s[basis_rows[i]] - p.offsets[basis_rows[i]];
      RatVector x = multiply(*inv, rhs);
      if (active_set(p, x)) points.emplace(std::move(x), true);
      return true;
    });
  }

  std::vector<VertexData> out;
  out.reserve(points.size());
  for (const auto& [x, unused] : points) out.push_back({x, *active_set(p, x)});
  return out;
}

std::optional<RatVector> positive_row_combination(const IntMatrix& gamma) {
  std::vector<LinearConstraint> cons;
  std::map<IntVector, bool> seen;
  for (std::size_t j = 0; j < gamma.cols(); ++j) {
    IntVector col = gamma.column(j);
    if (!seen.emplace(col, true).second) continue;
    cons.push_back({to_rational(col), Relation::Gt, Rational(0)});
  }
  return fm_feasible_point(gamma.rows(), std::move(cons));
}

StructuralFlags structural_flags(const PolytopePresentation& p, const std::vector<VertexData>& verts) {
  validate(p);
  const std::size_t k = p.dim();
  const std::size_t n = p.facets();
  StructuralFlags f;

  f.primitive_normals = true;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector col = p.normals.column(i);
    if (gcd_of(col) != 1) f.primitive_normals = false;
  }

  const bool full_rank = rank(p.normals) == k;
  f.bounded = full_rank && positive_row_combination(integer_kernel(p.normals)).has_value();

  if (!verts.empty()) {
    f.nonempty = true;
  } else if (f.bounded) {
    f.nonempty = false;
  } else {
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector a(k);
      for (std::size_t r = 0; r < k; ++r) a[r] = Rational(p.normals(r, i));
      cons.push_back({std::move(a), Relation::Ge, -p.offsets[i]});
    }
    f.nonempty = fm_feasible_point(k, std::move(cons)).has_value();
  }

  f.generic_simple = !verts.empty() && std::all_of(verts.begin(), verts.end(), [&](const VertexData& v) {
    return v.active.size() == k;
  });

  // A facet is irredundant when its tight vertices span a (k-1)-dimensional
  // face and no other facet is the same half-space.
  f.irredundant = f.nonempty && !verts.empty();
  std::vector<std::pair<IntVector, Rational>> normalized(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector col = p.normals.column(i);
    Integer g = gcd_of(col);
    for (auto& z : col) z /= g;
    normalized[i] = {std::move(col), p.offsets[i] / Rational(g)};
  }
  for (std::size_t i = 0; i < n && f.irredundant; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && normalized[j] == normalized[i]) f.irredundant = false;
    std::vector<const VertexData*> tight;
    for (const auto& v : verts)
      if (std::binary_search(v.active.begin(), v.active.end(), i)) tight.push_back(&v);
    if (tight.size() < k) {
      f.irredundant = false;
      break;
    }
    std::vector<RatVector> diffs;
    for (std::size_t t = 1; t < tight.size(); ++t) {
      RatVector d(k);
      for (std::size_t r = 0; r < k; ++r) d[r] = tight[t]->point[r] - tight[0]->point[r];
      diffs.push_back(std::move(d));
    }
    std::vector<IntVector> rows;
    for (const auto& d : diffs) rows.push_back(clear_denominators(d));
    std::size_t r = rows.empty() ? 0 : rank(IntMatrix::from_rows(rows, k));
    if (r != k - 1) f.irredundant = false;
  }
  return f;
}

DelzantResult delzant_check(const PolytopePresentation& p, const std::vector<VertexData>& verts) {
  const std::size_t k = p.dim();
  IntMatrix basis = lattice_basis(p.normals.transpose());
  if (basis.rows() != k) fail(ErrorKind::Structural, "facet normals do not span the ambient space");
  const Integer det_l = abs(determinant(basis));
  DelzantResult res{true, std::nullopt};
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (verts[v].active.size() != k) fail(ErrorKind::Structural, "Delzant check needs a simple polytope");
    // Z<active normals> sits inside L with index |det A_S| / det L.
    Integer d = abs(determinant(p.normals.select_cols(verts[v].active)));
    if (d != det_l) {
      res.is_delzant = false;
      res.witness = v;
      break;
    }
  }
  return res;
}

FanoResult fano_check(const PolytopePresentation& p) {
  validate(p);
  const std::size_t k = p.dim();
  const std::size_t n = p.facets();
  for (std::size_t i = 0; i < n; ++i) {
    IntVector col = p.normals.column(i);
    if (gcd_of(col) != 1) {
      return {std::nullopt, "normal " + std::to_string(i + 1) + " is not primitive; Fano check refused"};
    }
  }
  // [A^T | -1] (v; c) = -b
  IntMatrix m(n, k + 1);
  RatVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < k; ++r) m(i, r) = p.normals(r, i);
    m(i, k) = -1;
    rhs[i] = -p.offsets[i];
  }
  auto sol = solve_rational(m, rhs);
  if (!sol || (*sol)[k] <= 0) return {std::nullopt, {}};
  FanoData fd{(*sol)[k], RatVector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k))};
  return {std::move(fd), {}};
}

PolytopePresentation normalize_normals(const PolytopePresentation& p) {
  PolytopePresentation q = p;
  for (std::size_t i = 0; i < p.facets(); ++i) {
    IntVector col = p.normals.column(i);
    Integer g = gcd_of(col);
    if (g <= 1) continue;
    for (std::size_t r = 0; r < p.dim(); ++r) q.normals(r, i) /= g;
    q.offsets[i] /= Rational(g);
  }
  return q;
}

}  // namespace lagrangelab
