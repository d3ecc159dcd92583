#include "lagrangelab/maslov.hpp"

#include "lagrangelab/errors.hpp"

namespace lagrangelab {

IntVector maslov_vector(const QuadricSystem& q) {
  IntVector t(q.gamma.rows());
  for (std::size_t r = 0; r < q.gamma.rows(); ++r)
    for (const auto& z : q.gamma.row(r)) t[r] += z;
  return t;
}

IntVector maslov_on_generators(const LatticeData& l, std::span<const Integer> t) {
  RatVector tr = to_rational(t);
  RatVector v = multiply(l.dual_basis, tr);
  IntVector mu;
  for (const auto& x : v) {
    if (!is_integral(x)) fail(ErrorKind::Invariant, "Maslov index on a generator is not an integer");
    mu.push_back(numerator(x));
  }
  return mu;
}

RatVector area_on_generators(const LatticeData& l, std::span<const Rational> delta) {
  return multiply(l.dual_basis, delta);
}

Integer minimal_maslov(std::span<const Integer> mu) { return gcd_of(mu); }

std::optional<Rational> monotonicity(const QuadricSystem& q) {
  IntVector t = maslov_vector(q);
  std::optional<Rational> c;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) {
      if (q.delta[i] != 0) return std::nullopt;
      continue;
    }
    Rational ci = q.delta[i] / Rational(t[i]);
    if (c && *c != ci) return std::nullopt;
    c = ci;
  }
  if (!c || *c <= 0) return std::nullopt;
  return c;
}

MaslovReport maslov_report(const QuadricSystem& q, const LatticeData& l) {
  MaslovReport m;
  m.t = maslov_vector(q);
  m.mu = maslov_on_generators(l, m.t);
  m.area_half_pi = area_on_generators(l, q.delta);
  m.orientation.assign(m.mu.size(), 1);
  for (std::size_t i = 0; i < m.mu.size(); ++i) {
    int s = sign(m.area_half_pi[i]);
    if (s < 0 || (s == 0 && m.mu[i] < 0)) {
      m.orientation[i] = -1;
      m.mu[i] = -m.mu[i];
      m.area_half_pi[i] = -m.area_half_pi[i];
    }
  }
  m.minimal_maslov = minimal_maslov(m.mu);
  m.mono_c = monotonicity(q);
  m.monotone = m.mono_c.has_value();
  if (m.mono_c) {
    m.mono_lambda_over_mu = *m.mono_c / 2;
    for (std::size_t i = 0; i < m.mu.size(); ++i)
      if (m.area_half_pi[i] != *m.mono_c * Rational(m.mu[i]))
        fail(ErrorKind::Invariant, "monotone system with area not proportional to Maslov index");
  }
  return m;
}

}  // namespace lagrangelab
