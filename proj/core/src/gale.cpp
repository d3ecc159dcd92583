#include "lagrangelab/gale.hpp"

#include "lagrangelab/combinations.hpp"
#include "lagrangelab/errors.hpp"
#include "lagrangelab/fourier_motzkin.hpp"
#include "lagrangelab/normal_forms.hpp"

#include <map>

namespace lagrangelab {

void validate(const QuadricSystem& q) {
  if (q.gamma.rows() == 0 || q.gamma.cols() == 0) fail(ErrorKind::Input, "gamma is empty");
  if (q.delta.size() != q.gamma.rows()) fail(ErrorKind::Input, "delta length does not match gamma rows");
  if (q.gamma.cols() <= q.gamma.rows())
    fail(ErrorKind::Input, "gamma needs more columns than rows");
  if (rank(q.gamma) != q.gamma.rows()) fail(ErrorKind::Structural, "gamma does not have full row rank");
}

QuadricSystem polytope_to_quadrics(const PolytopePresentation& p) {
  validate(p);
  if (rank(p.normals) != p.dim()) fail(ErrorKind::Structural, "facet normals do not span the ambient space");
  QuadricSystem q;
  q.gamma = integer_kernel(p.normals);
  q.delta = multiply(q.gamma, p.offsets);
  return q;
}

PolytopePresentation quadrics_to_polytope(const QuadricSystem& q) {
  validate(q);
  PolytopePresentation p;
  p.normals = integer_kernel(q.gamma);
  if (p.normals.rows() == 0) fail(ErrorKind::Structural, "quadric system has a zero-dimensional polytope");
  auto b = solve_rational(q.gamma, q.delta);
  if (!b) fail(ErrorKind::Structural, "Gamma b = delta is inconsistent");
  p.offsets = std::move(*b);
  return p;
}

QuadricSystem canonical_form(const QuadricSystem& q) {
  validate(q);
  QuadricSystem out;
  out.gamma = integer_kernel(integer_kernel(q.gamma));
  const IntMatrix gt = q.gamma.transpose();
  out.delta.resize(out.gamma.rows());
  for (std::size_t i = 0; i < out.gamma.rows(); ++i) {
    auto m = solve_rational(gt, to_rational(out.gamma.row(i)));
    if (!m) fail(ErrorKind::Invariant, "saturated row lies outside the row space");
    out.delta[i] = dot(*m, q.delta);
  }
  return out;
}

ColumnClasses column_classes(const IntMatrix& gamma) {
  ColumnClasses cc;
  std::map<IntVector, std::size_t> index;
  std::vector<IntVector> reps;
  cc.class_of.resize(gamma.cols());
  for (std::size_t j = 0; j < gamma.cols(); ++j) {
    IntVector col = gamma.column(j);
    auto [it, inserted] = index.emplace(col, reps.size());
    if (inserted) {
      reps.push_back(col);
      cc.multiplicity.push_back(0);
      cc.members.emplace_back();
    }
    cc.class_of[j] = it->second;
    ++cc.multiplicity[it->second];
    cc.members[it->second].push_back(j);
  }
  cc.vectors = IntMatrix(gamma.rows(), reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::size_t r = 0; r < gamma.rows(); ++r) cc.vectors(r, c) = reps[c][r];
  return cc;
}

namespace {

// s >= 0 (or > 0 where strict), s_zero == 0, Gamma_c s = delta.
bool class_point_exists(const IntMatrix& g, const RatVector& delta, std::optional<std::size_t> zero) {
  const std::size_t m = g.cols();
  std::vector<LinearConstraint> cons;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    RatVector a(m);
    for (std::size_t c = 0; c < m; ++c) a[c] = Rational(g(r, c));
    cons.push_back({std::move(a), Relation::Eq, delta[r]});
  }
  for (std::size_t c = 0; c < m; ++c) {
    RatVector a(m);
    a[c] = 1;
    cons.push_back({std::move(a), zero == c ? Relation::Eq : Relation::Gt, Rational(0)});
  }
  return fm_feasible_point(m, std::move(cons)).has_value();
}

}  // namespace

QuadricAnalysis analyze_quadrics(const QuadricSystem& q) {
  validate(q);
  QuadricAnalysis qa;
  qa.classes = column_classes(q.gamma);
  const IntMatrix& g = qa.classes.vectors;
  const std::size_t d = q.equations();
  const std::size_t m = g.cols();

  qa.positive_row = positive_row_combination(g);
  qa.flags.bounded = qa.positive_row.has_value();

  std::map<RatVector, std::vector<std::size_t>> found;
  for_each_combination(m, d, [&](const std::vector<std::size_t>& t) {
    auto u = solve_square(g.select_cols(t), q.delta);
    if (!u) return true;
    for (const auto& v : *u)
      if (v < 0) return true;
    RatVector s(m);
    for (std::size_t i = 0; i < d; ++i) s[t[i]] = (*u)[i];
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < m; ++c)
      if (s[c] > 0) support.push_back(c);
    found.emplace(std::move(s), std::move(support));
    return true;
  });
  for (auto& [s, support] : found) qa.vertices.push_back({s, support});

  if (!qa.vertices.empty()) {
    qa.flags.nonempty = true;
  } else if (!qa.flags.bounded) {
    std::vector<LinearConstraint> cons;
    for (std::size_t r = 0; r < d; ++r) {
      RatVector a(m);
      for (std::size_t c = 0; c < m; ++c) a[c] = Rational(g(r, c));
      cons.push_back({std::move(a), Relation::Eq, q.delta[r]});
    }
    for (std::size_t c = 0; c < m; ++c) {
      RatVector a(m);
      a[c] = 1;
      cons.push_back({std::move(a), Relation::Ge, Rational(0)});
    }
    qa.flags.nonempty = fm_feasible_point(m, std::move(cons)).has_value();
  }

  qa.flags.smooth = !qa.vertices.empty();
  for (const auto& v : qa.vertices)
    if (v.support.size() != d) qa.flags.smooth = false;

  // Facets in a class of size >= 2 are irredundant as soon as an interior
  // class point exists: put all of the class mass on a sibling. Singletons
  // need a point where only their own coordinate vanishes.
  qa.flags.connected = !qa.vertices.empty() && class_point_exists(g, q.delta, std::nullopt);
  for (std::size_t c = 0; c < m && qa.flags.connected; ++c)
    if (qa.classes.multiplicity[c] == 1 && !class_point_exists(g, q.delta, c)) qa.flags.connected = false;
  return qa;
}

}  // namespace lagrangelab
