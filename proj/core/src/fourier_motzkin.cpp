#include "lagrangelab/fourier_motzkin.hpp"

#include "lagrangelab/errors.hpp"

#include <map>
#include <utility>

namespace lagrangelab {

namespace {

struct Ineq {
  IntVector a;  // a · x (>= or >) rhs
  Rational rhs;
  bool strict = false;
};

// Scale to primitive integer coefficients; returns false when the inequality
// has no variables left (caller inspects the constant instead).
bool normalize(Ineq& q) {
  Integer g = gcd_of(q.a);
  if (g == 0) return false;
  if (g != 1) {
    for (auto& z : q.a) z /= g;
    q.rhs /= Rational(g);
  }
  return true;
}

// Keeps only the tightest inequality per coefficient vector. Returns false
// on a contradiction between constants.
bool reduce(std::vector<Ineq>& qs) {
  std::map<IntVector, Ineq> best;
  for (auto& q : qs) {
    if (!normalize(q)) {
      if (q.strict ? !(q.rhs < 0) : (q.rhs > 0)) return false;
      continue;
    }
    auto it = best.find(q.a);
    if (it == best.end()) {
      best.emplace(q.a, std::move(q));
    } else if (q.rhs > it->second.rhs || (q.rhs == it->second.rhs && q.strict)) {
      it->second = std::move(q);
    }
  }
  qs.clear();
  for (auto& [key, q] : best) qs.push_back(std::move(q));
  return true;
}

struct Substitution {
  std::size_t var;
  RatVector coeffs;  // x_var = coeffs · x + constant, coeffs[var] == 0
  Rational constant;
};

}  // namespace

std::optional<RatVector> fm_feasible_point(std::size_t vars,
                                           std::vector<LinearConstraint> constraints) {
  for (const auto& c : constraints)
    if (c.coeffs.size() != vars) fail(ErrorKind::Input, "constraint width mismatch");

  // Equalities: Gaussian substitution.
  std::vector<Substitution> subs;
  std::vector<LinearConstraint> rest;
  std::vector<LinearConstraint> eqs;
  for (auto& c : constraints) (c.rel == Relation::Eq ? eqs : rest).push_back(std::move(c));
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    auto& eq = eqs[e];
    std::size_t piv = vars;
    for (std::size_t j = 0; j < vars; ++j)
      if (eq.coeffs[j] != 0) {
        piv = j;
        break;
      }
    if (piv == vars) {
      if (eq.rhs != 0) return std::nullopt;
      continue;
    }
    Substitution s{piv, RatVector(vars), eq.rhs / eq.coeffs[piv]};
    for (std::size_t j = 0; j < vars; ++j)
      if (j != piv) s.coeffs[j] = -eq.coeffs[j] / eq.coeffs[piv];
    auto apply = [&](LinearConstraint& c) {
      Rational f = c.coeffs[piv];
      if (f == 0) return;
      c.coeffs[piv] = 0;
      for (std::size_t j = 0; j < vars; ++j) c.coeffs[j] += f * s.coeffs[j];
      c.rhs -= f * s.constant;
    };
    for (std::size_t f = e + 1; f < eqs.size(); ++f) apply(eqs[f]);
    for (auto& c : rest) apply(c);
    for (auto& prev : subs) {
      Rational f = prev.coeffs[piv];
      if (f == 0) continue;
      prev.coeffs[piv] = 0;
      for (std::size_t j = 0; j < vars; ++j) prev.coeffs[j] += f * s.coeffs[j];
      prev.constant += f * s.constant;
    }
    subs.push_back(std::move(s));
  }

  std::vector<Ineq> current;
  for (auto& c : rest) {
    IntVector a = clear_denominators(c.coeffs);
    // clear_denominators scales by a positive factor; apply it to rhs too.
    Rational scale = 1;
    for (std::size_t j = 0; j < vars; ++j)
      if (c.coeffs[j] != 0) {
        scale = Rational(a[j]) / c.coeffs[j];
        break;
      }
    current.push_back({std::move(a), c.rhs * scale, c.rel == Relation::Gt});
  }
  if (!reduce(current)) return std::nullopt;

  // stages[i] holds the system over variables 0..i-1 after eliminating i..vars-1.
  std::vector<std::vector<Ineq>> stages(vars + 1);
  stages[vars] = current;
  for (std::size_t v = vars; v-- > 0;) {
    std::vector<Ineq> lower, upper, next;
    for (auto& q : stages[v + 1]) {
      int s = sign(q.a[v]);
      if (s > 0) lower.push_back(q);
      else if (s < 0) upper.push_back(q);
      else next.push_back(q);
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // lo.a[v] > 0, up.a[v] < 0: combine with positive weights to cancel x_v.
        Integer wl = -up.a[v];
        Integer wu = lo.a[v];
        Ineq q{IntVector(vars), Rational(wl) * lo.rhs + Rational(wu) * up.rhs, lo.strict || up.strict};
        for (std::size_t j = 0; j < vars; ++j) q.a[j] = wl * lo.a[j] + wu * up.a[j];
        next.push_back(std::move(q));
      }
    if (!reduce(next)) return std::nullopt;
    stages[v] = std::move(next);
  }

  // Back substitution, one variable at a time.
  RatVector x(vars);
  for (std::size_t v = 0; v < vars; ++v) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& q : stages[v + 1]) {
      if (q.a[v] == 0) continue;
      Rational r = q.rhs;
      for (std::size_t j = 0; j < v; ++j) r -= Rational(q.a[j]) * x[j];
      Rational bound = r / Rational(q.a[v]);
      if (q.a[v] > 0) {
        if (!lo || bound > *lo || (bound == *lo && q.strict)) {
          lo = bound;
          lo_strict = q.strict;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && q.strict)) {
          hi = bound;
          hi_strict = q.strict;
        }
      }
    }
    if (lo && hi) {
      if (*lo == *hi) {
        if (lo_strict || hi_strict) fail(ErrorKind::Invariant, "Fourier-Motzkin back substitution failed");
        x[v] = *lo;
      } else {
        x[v] = (*lo + *hi) / 2;
      }
    } else if (lo) {
      x[v] = lo_strict ? *lo + 1 : *lo;
    } else if (hi) {
      x[v] = hi_strict ? *hi - 1 : *hi;
    }
  }
  // Undo substitutions in reverse order of creation (later ones do not
  // reference earlier pivots after the propagation above).
  for (const auto& s : subs) {
    Rational val = s.constant;
    for (std::size_t j = 0; j < vars; ++j) val += s.coeffs[j] * x[j];
    x[s.var] = val;
  }
  return x;
}

}  // namespace lagrangelab
