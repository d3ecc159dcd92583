#include "properties.hpp"

#include "oracles.hpp"

#include "lagrangelab/combinations.hpp"
#include "lagrangelab/errors.hpp"
#include "lagrangelab/lattice.hpp"
#include "lagrangelab/maslov.hpp"
#include "lagrangelab/normal_forms.hpp"
#include "lagrangelab/report.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace props {

using namespace lagrangelab;

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

PolytopePresentation random_polytope(Rng& rng) {
  const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 3));
  const std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<long>(k) + 1, 8));
  PolytopePresentation p;
  p.normals = IntMatrix(k, n);
  for (std::size_t i = 0; i < n; ++i) {
    while (true) {
      long g = 0;
      std::vector<long> a(k);
      for (auto& x : a) {
        x = uniform(rng, -3, 3);
        g = std::gcd(g, x);
      }
      if (g != 1) continue;
      for (std::size_t r = 0; r < k; ++r) p.normals(r, i) = a[r];
      break;
    }
  }
  if (uniform(rng, 0, 1) == 0) {
    Rational c(uniform(rng, 1, 3));
    p.offsets.assign(n, c);
  } else {
    for (std::size_t i = 0; i < n; ++i) p.offsets.emplace_back(uniform(rng, -3, 3));
  }
  return p;
}

IntMatrix random_unimodular(Rng& rng, std::size_t d) {
  IntMatrix u = IntMatrix::identity(d);
  if (d == 1) {
    if (uniform(rng, 0, 1)) u.negate_row(0);
    return u;
  }
  for (int step = 0; step < 8; ++step) {
    auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1));
    auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 2));
    if (b >= a) ++b;
    switch (uniform(rng, 0, 2)) {
      case 0:
        u.add_row_multiple(a, b, Integer(uniform(rng, -2, 2)));
        break;
      case 1:
        u.swap_rows(a, b);
        break;
      default:
        u.negate_row(a);
    }
  }
  return u;
}

std::string describe(const PolytopePresentation& p) {
  std::ostringstream os;
  os << "normals";
  for (std::size_t i = 0; i < p.facets(); ++i) {
    os << " (";
    for (std::size_t r = 0; r < p.dim(); ++r) os << (r ? "," : "") << p.normals(r, i);
    os << ")";
  }
  os << " offsets";
  for (const auto& b : p.offsets) os << " " << to_string(b);
  return os.str();
}

void record(Result& res, const std::string& what) {
  ++res.failures;
  if (res.first_failure.empty()) res.first_failure = what;
}

// A random polytope on which the full pipeline runs; nullopt after too many
// structurally rejected draws.
std::optional<std::pair<PolytopePresentation, LagrangianReport>> valid_instance(Rng& rng, Result& res,
                                                                               bool need_delzant) {
  CheckOptions opt;
  opt.numeric = false;
  for (int tries = 0; tries < 20000; ++tries) {
    ++res.attempts;
    PolytopePresentation p = random_polytope(rng);
    try {
      LagrangianReport r = check(p, opt);
      if (need_delzant && !r.delzant().value_or(false)) continue;
      return std::make_pair(std::move(p), std::move(r));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Structural) continue;
      record(res, describe(p) + ": " + e.what());
    }
  }
  return std::nullopt;
}

}  // namespace

Result embedded_iff_delzant(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  Result res;
  while (res.cases < cases) {
    auto inst = valid_instance(rng, res, false);
    if (!inst) break;
    const auto& [p, r] = *inst;
    ++res.cases;
    const bool oracle = oracle::brute_delzant(p);
    if (r.embedded() != oracle || r.delzant() != oracle)
      record(res, describe(p) + ": embedded " + std::to_string(r.embedded()) + ", delzant oracle " +
                      std::to_string(oracle));
  }
  return res;
}

Result fano_iff_monotone(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  Result res;
  while (res.cases < cases) {
    auto inst = valid_instance(rng, res, true);
    if (!inst) break;
    const auto& [p, r] = *inst;
    ++res.cases;
    auto fano = oracle::brute_fano(p);
    auto mono = oracle::brute_monotone(r.quadrics);
    if (fano != mono || r.fano_c() != fano || r.monotone_c() != mono)
      record(res, describe(p) + ": fano and monotone verdicts differ");
  }
  return res;
}

Result gale_round_trip(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  Result res;
  while (res.cases < cases) {
    ++res.attempts;
    PolytopePresentation p = random_polytope(rng);
    if (rank(p.normals) != p.dim()) continue;
    ++res.cases;
    QuadricSystem q = polytope_to_quadrics(p);
    bool ok = q.equations() == p.facets() - p.dim();
    // Gamma A^T = 0 and delta = Gamma b.
    for (std::size_t i = 0; ok && i < q.equations(); ++i) {
      for (std::size_t r = 0; r < p.dim(); ++r) {
        Integer s = 0;
        for (std::size_t j = 0; j < p.facets(); ++j) s += q.gamma(i, j) * p.normals(r, j);
        if (s != 0) ok = false;
      }
      Rational d = 0;
      for (std::size_t j = 0; j < p.facets(); ++j) d += Rational(q.gamma(i, j)) * p.offsets[j];
      if (d != q.delta[i]) ok = false;
    }
    QuadricSystem c = canonical_form(q);
    if (!(canonical_form(c) == c)) ok = false;
    if (!(polytope_to_quadrics(quadrics_to_polytope(q)) == c)) ok = false;
    IntMatrix u = random_unimodular(rng, q.equations());
    QuadricSystem moved{u * q.gamma, {}};
    for (std::size_t i = 0; i < u.rows(); ++i) {
      Rational d = 0;
      for (std::size_t j = 0; j < u.cols(); ++j) d += Rational(u(i, j)) * q.delta[j];
      moved.delta.push_back(d);
    }
    if (!(canonical_form(moved) == c)) ok = false;
    if (!ok) record(res, describe(p));
  }
  return res;
}

namespace {

// Largest g with t / g in the column lattice of gamma, by minor gcds.
Integer oracle_minimal_maslov(const QuadricSystem& q) {
  const std::size_t d = q.equations(), n = q.variables();
  IntVector t(d, Integer(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i] += q.gamma(i, j);
  Integer content = gcd_of(t);
  if (content == 0) return 0;
  const Integer base = oracle::column_lattice_covolume(q.gamma);
  for (Integer g = content; g >= 1; --g) {
    if (content % g != 0) continue;
    IntMatrix ext(d, n + 1);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < n; ++j) ext(i, j) = q.gamma(i, j);
      ext(i, n) = t[i] / g;
    }
    if (oracle::column_lattice_covolume(ext) == base) return g;
  }
  return 1;
}

}  // namespace

Result maslov_unimodular_invariance(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  Result res;
  while (res.cases < cases) {
    auto inst = valid_instance(rng, res, false);
    if (!inst) break;
    const auto& [p, r] = *inst;
    ++res.cases;
    const QuadricSystem& q = r.quadrics;
    IntMatrix u = random_unimodular(rng, q.equations());
    std::vector<std::size_t> perm(q.variables());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    QuadricSystem moved{(u * q.gamma).select_cols(perm), {}};
    for (std::size_t i = 0; i < u.rows(); ++i) {
      Rational d = 0;
      for (std::size_t j = 0; j < u.cols(); ++j) d += Rational(u(i, j)) * q.delta[j];
      moved.delta.push_back(d);
    }
    LatticeData l = lattice_data(moved);
    Integer n2 = maslov_report(moved, l).minimal_maslov;
    Integer expect = oracle_minimal_maslov(q);
    if (n2 != r.maslov.minimal_maslov || expect != r.maslov.minimal_maslov)
      record(res, describe(p) + ": N " + to_string(r.maslov.minimal_maslov) + " after change " + to_string(n2) +
                      " oracle " + to_string(expect));
  }
  return res;
}

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -3, 3);
  return m;
}

bool is_hnf(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool first = true, zero_seen = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;
    if (!first && c <= last_pivot) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    first = false;
    last_pivot = c;
  }
  return true;
}

bool unimodular(const IntMatrix& u) {
  Integer d = oracle::cofactor_det(u);
  return d == 1 || d == -1;
}

Integer minor_gcd(const IntMatrix& m, std::size_t r) {
  Integer g = 0;
  for_each_combination(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
    IntMatrix sub = m.select_rows(rows);
    for_each_combination(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
      g = gcd(g, oracle::cofactor_det(sub.select_cols(cols)));
      return true;
    });
    return true;
  });
  return abs(g);
}

}  // namespace

Result normal_form_identities(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  Result res;
  while (res.cases < cases) {
    ++res.attempts;
    ++res.cases;
    const auto rows = static_cast<std::size_t>(uniform(rng, 1, 4));
    const auto cols = static_cast<std::size_t>(uniform(rng, 1, 6));
    IntMatrix m = random_matrix(rng, rows, cols);
    std::ostringstream what;
    what << m;

    HermiteForm h = hnf(m);
    if (!(h.u * m == h.h) || !unimodular(h.u) || !is_hnf(h.h)) {
      record(res, "hnf of " + what.str());
      continue;
    }

    SmithForm s = snf(m);
    bool ok = s.u * m * s.v == s.d && unimodular(s.u) && unimodular(s.v);
    std::size_t r = 0;
    Integer prod = 1;
    for (std::size_t i = 0; ok && i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j) {
        if (i != j && s.d(i, j) != 0) ok = false;
        if (i == j && s.d(i, i) < 0) ok = false;
      }
    for (std::size_t i = 0; ok && i < std::min(rows, cols); ++i) {
      if (s.d(i, i) == 0) continue;
      ++r;
      prod *= s.d(i, i);
      if (i + 1 < std::min(rows, cols) && s.d(i + 1, i + 1) % s.d(i, i) != 0) ok = false;
    }
    if (!ok || r != rank(m) || (r > 0 && prod != minor_gcd(m, r))) {
      record(res, "snf of " + what.str());
      continue;
    }

    IntMatrix k = integer_kernel(m);
    ok = k.rows() == cols - r;
    if (ok && k.rows() > 0) {
      if (!(m * k.transpose()).is_zero()) ok = false;
      if (minor_gcd(k, k.rows()) != 1) ok = false;  // saturated
    }
    if (!ok) {
      record(res, "kernel of " + what.str());
      continue;
    }

    // Index of a random full-rank sublattice of Z^d against point counting.
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 3));
    IntMatrix sub = random_matrix(rng, d, d);
    if (oracle::cofactor_det(sub) != 0) {
      auto idx = lattice_index(sub, IntMatrix::identity(d));
      if (!idx || *idx != oracle::parallelepiped_points(sub)) {
        std::ostringstream os;
        os << sub;
        record(res, "lattice index of " + os.str());
      }
    }
  }
  return res;
}

Result merge_order_oracle(std::size_t max_classes, std::size_t max_mult) {
  std::vector<std::pair<long, long>> dirs;
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y)
      if ((x != 0 || y != 0) && std::gcd(x, y) == 1) dirs.emplace_back(x, y);

  Result res;
  for (std::size_t m = 1; m <= max_classes; ++m) {
    for_each_combination(dirs.size(), m, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::pair<long, long>> chosen;
      std::vector<LambdaClass> points;
      // Multiplicity 8^i tags class i, so the implementation's final
      // multiplicities spell out which classes were merged.
      std::size_t tag = 1;
      for (auto i : pick) {
        chosen.push_back(dirs[i]);
        points.push_back({{Rational(dirs[i].first), Rational(dirs[i].second)}, tag});
        tag *= 8;
      }
      if (!is_regular(points)) return true;
      ++res.attempts;

      oracle::MergeOutcome ex = oracle::exhaustive_merges(chosen);
      std::vector<unsigned> impl_masks;
      for (const auto& ray : merge_fixpoint(cyclic_rays(points))) {
        unsigned mask = 0;
        std::size_t v = ray.multiplicity;
        for (unsigned bit = 0; v > 0; ++bit, v /= 8)
          if (v % 8 == 1) mask |= 1u << bit;
        impl_masks.push_back(mask);
      }

      std::vector<std::size_t> mult(m, 1);
      while (true) {
        ++res.cases;
        auto expect = oracle::cyclic_multiplicities(ex.finals.front(), mult);
        bool unique = std::all_of(ex.finals.begin(), ex.finals.end(),
                                  [&](const auto& f) { return oracle::cyclic_multiplicities(f, mult) == expect; });
        if (!unique || oracle::cyclic_multiplicities(impl_masks, mult) != expect) {
          std::ostringstream os;
          os << (unique ? "implementation differs on" : "merge order matters for");
          for (const auto& [x, y] : chosen) os << " (" << x << "," << y << ")";
          os << " multiplicities";
          for (auto k : mult) os << " " << k;
          record(res, os.str());
        }
        std::size_t i = 0;
        while (i < m && mult[i] == max_mult) mult[i++] = 1;
        if (i == m) break;
        ++mult[i];
      }
      return true;
    });
  }
  return res;
}

}  // namespace props
