#include "doctest.h"

#include "oracles.hpp"
#include "properties.hpp"
#include "test_data.hpp"

#include "lagrangelab/lattice.hpp"
#include "lagrangelab/maslov.hpp"

using namespace lagrangelab;

namespace {

QuadricSystem pentagon_quadrics() { return polytope_to_quadrics(data_polytope("pentagon.json")); }

// Kronecker pairing of the dual basis with its basis columns.
void check_dual(const QuadricSystem& q, const LatticeData& l) {
  const std::size_t d = q.equations();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t m = 0; m < l.basis_columns.size(); ++m) {
      Rational s = 0;
      for (std::size_t r = 0; r < d; ++r) s += l.dual_basis(i, r) * Rational(q.gamma(r, l.basis_columns[m]));
      CHECK(s == (i == m ? 1 : 0));
    }
}

}  // namespace

TEST_CASE("basis choice") {
  QuadricSystem q{IntMatrix{{2, 1}}, {Rational(3)}};
  auto l = lattice_data(q);
  CHECK(l.basis_columns == std::vector<std::size_t>{1});
  check_dual(q, l);

  auto p = pentagon_quadrics();
  auto lp = lattice_data(p);
  CHECK(lp.basis_columns == std::vector<std::size_t>{2, 3, 4});
  check_dual(p, lp);
}

TEST_CASE("no generating column subset falls back to the Hermite basis") {
  QuadricSystem q{IntMatrix{{4, 5, 3}}, {Rational(12)}};
  auto l = lattice_data(q);
  CHECK(l.basis_columns.empty());
  CHECK(l.dual_basis(0, 0) == 1);
  auto m = maslov_report(q, l);
  CHECK(m.minimal_maslov == 12);
}

TEST_CASE("sign actions are the dual pairing mod 2") {
  auto q = pentagon_quadrics();
  auto l = lattice_data(q);
  auto acts = sign_actions(q, l);
  REQUIRE(acts.size() == 3);
  // The dual basis from an independent Gauss-Jordan solve.
  oracle::RatRows bt(3, std::vector<Rational>(3));
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t r = 0; r < 3; ++r) bt[m][r] = Rational(q.gamma(r, l.basis_columns[m]));
  for (std::size_t i = 0; i < 3; ++i) {
    RatVector e(3, Rational(0));
    e[i] = 1;
    auto eps = oracle::gauss_solve(bt, e);
    REQUIRE(eps.consistent);
    for (std::size_t j = 0; j < 5; ++j) {
      Rational s = 0;
      for (std::size_t r = 0; r < 3; ++r) s += eps.particular[r] * Rational(q.gamma(r, j));
      CHECK(acts[i].flips[j] == (lagrangelab::numerator(s) % 2 != 0));
    }
    CHECK(acts[i].flips[l.basis_columns[i]]);
  }
}

TEST_CASE("embedding criterion") {
  QuadricSystem ok{IntMatrix{{1, 1, 1}}, {Rational(3)}};
  CHECK(embedding_check(ok, analyze_quadrics(ok)).embedded);
  QuadricSystem doubled{IntMatrix{{2, 1, 1}}, {Rational(3)}};
  auto e = embedding_check(doubled, analyze_quadrics(doubled));
  CHECK_FALSE(e.embedded);
  CHECK(e.witness);
}

TEST_CASE("pentagon Maslov data") {
  auto q = pentagon_quadrics();
  auto m = maslov_report(q, lattice_data(q));
  CHECK(m.mu == IntVector{2, 2, 3});
  CHECK(m.minimal_maslov == 1);
  CHECK(m.monotone);
  CHECK(m.mono_c == Rational(1));
  for (const auto& a : m.area_half_pi) CHECK(a >= 0);
}

TEST_CASE("round sphere") {
  QuadricSystem q{IntMatrix{{1, 1, 1, 1}}, {Rational(4)}};
  auto m = maslov_report(q, lattice_data(q));
  CHECK(m.t == IntVector{4});
  CHECK(m.minimal_maslov == 4);
  CHECK(m.mono_c == Rational(1));
  CHECK(minimal_maslov(IntVector{0, 0}) == 0);
  CHECK(minimal_maslov(IntVector{-6, 4}) == 2);
}

TEST_CASE("non-monotone system") {
  QuadricSystem q{IntMatrix{{1, 1, 0}, {0, 1, 1}}, {Rational(1), Rational(2)}};
  CHECK_FALSE(monotonicity(q));
  CHECK(oracle::brute_monotone(q) == monotonicity(q));
}

TEST_CASE("minimal Maslov number under lattice changes") {
  auto r = props::maslov_unimodular_invariance(303, 100);
  INFO(r.first_failure);
  CHECK(r.ok(100));
}
