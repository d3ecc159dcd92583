#include "lagrangelab/normal_forms.hpp"

#include "lagrangelab/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace lagrangelab {

namespace {

// Floor division for GMP integers.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Row operation applied to both the working matrix and the transform.
void row_add(IntMatrix& h, IntMatrix& u, std::size_t dst, std::size_t src, const Integer& f) {
  h.add_row_multiple(dst, src, f);
  u.add_row_multiple(dst, src, f);
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        row_add(h, u, i, r, -floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f = floor_div(h(i, c), h(r, c));
      if (f != 0) row_add(h, u, i, r, -f);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SmithForm snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        return {std::move(d), std::move(u), std::move(v)};
      }
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer f = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -f);
        u.add_row_multiple(i, t, -f);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer f = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -f);
        v.add_col_multiple(j, t, -f);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row carrying a non-multiple into the pivot row.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  HermiteForm f = hnf(m.transpose());
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < f.h.rows(); ++i) {
    bool zero = true;
    for (const auto& z : f.h.row(i))
      if (z != 0) {
        zero = false;
        break;
      }
    if (zero) basis.emplace_back(f.u.row(i).begin(), f.u.row(i).end());
  }
  if (basis.empty()) return IntMatrix(0, m.cols());
  return lattice_basis(IntMatrix::from_rows(basis, m.cols()));
}

std::optional<RatVector> solve_rational(const IntMatrix& m, std::span<const Rational> v) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (v.size() != rows) fail(ErrorKind::Input, "right-hand side length mismatch");
  RatMatrix a(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = Rational(m(i, j));
    a(i, cols) = v[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(a(p, j), a(r, j));
    Rational piv = a(r, c);
    for (std::size_t j = c; j <= cols; ++j) a(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j <= cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a(i, cols) != 0) return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a(i, cols);
  return x;
}

std::optional<RatVector> solve_square(const IntMatrix& m, std::span<const Rational> v) {
  if (m.rows() != m.cols()) fail(ErrorKind::Input, "solve_square needs a square matrix");
  const std::size_t n = m.rows();
  RatMatrix a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));
    a(i, n) = v[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = c; j <= n; ++j) std::swap(a(p, j), a(c, j));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j <= n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = a(i, n);
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  IntMatrix h = hnf(generators).h;
  std::size_t nz = 0;
  while (nz < h.rows()) {
    bool zero = true;
    for (const auto& z : h.row(nz))
      if (z != 0) {
        zero = false;
        break;
      }
    if (zero) break;
    ++nz;
  }
  std::vector<std::size_t> keep(nz);
  for (std::size_t i = 0; i < nz; ++i) keep[i] = i;
  return h.select_rows(keep);
}

bool in_lattice(const IntMatrix& basis, std::span<const Integer> v) {
  if (v.size() != basis.cols()) fail(ErrorKind::Input, "vector length mismatch");
  IntVector w(v.begin(), v.end());
  std::size_t c = 0;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    while (c < basis.cols() && basis(i, c) == 0) {
      if (w[c] != 0) return false;
      ++c;
    }
    if (c == basis.cols()) break;
    if (w[c] % basis(i, c) != 0) return false;
    Integer f = w[c] / basis(i, c);
    for (std::size_t j = c; j < basis.cols(); ++j) w[j] -= f * basis(i, j);
    ++c;
  }
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) return false;
  return true;
}

std::optional<Integer> lattice_index(const IntMatrix& sub, const IntMatrix& full) {
  if (sub.cols() != full.cols()) fail(ErrorKind::Input, "lattice dimension mismatch");
  IntMatrix b = lattice_basis(full);
  IntMatrix s = sub.rows() ? lattice_basis(sub) : IntMatrix(0, full.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (!in_lattice(b, s.row(i))) fail(ErrorKind::Input, "sublattice is not contained in lattice");
  if (s.rows() < b.rows()) return std::nullopt;
  if (b.rows() == 0) return Integer(1);
  // Coordinates of the sublattice basis in the lattice basis; index = |det|.
  IntMatrix bt = b.transpose();
  IntMatrix coords(s.rows(), b.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    RatVector rhs = to_rational(s.row(i));
    auto x = solve_rational(bt, rhs);
    for (std::size_t j = 0; j < b.rows(); ++j) coords(i, j) = numerator((*x)[j]);
  }
  Integer d = determinant(coords);
  return d < 0 ? Integer(-d) : d;
}

}  // namespace lagrangelab
