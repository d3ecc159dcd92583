#include "doctest.h"

#include "lagrangelab/fourier_motzkin.hpp"

using namespace lagrangelab;

namespace {

LinearConstraint c(std::initializer_list<long> a, Relation rel, long rhs) {
  LinearConstraint out;
  for (long x : a) out.coeffs.emplace_back(x);
  out.rel = rel;
  out.rhs = rhs;
  return out;
}

bool satisfies(const RatVector& x, const LinearConstraint& con) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += con.coeffs[i] * x[i];
  switch (con.rel) {
    case Relation::Ge:
      return s >= con.rhs;
    case Relation::Gt:
      return s > con.rhs;
    case Relation::Eq:
      return s == con.rhs;
  }
  return false;
}

}  // namespace

TEST_CASE("feasible system returns a witness") {
  std::vector<LinearConstraint> cs{c({1, 1}, Relation::Ge, 2), c({1, -1}, Relation::Eq, 0),
                                   c({-1, 0}, Relation::Ge, -5), c({0, 1}, Relation::Gt, 0)};
  auto x = fm_feasible_point(2, cs);
  REQUIRE(x);
  for (const auto& con : cs) CHECK(satisfies(*x, con));
}

TEST_CASE("infeasible systems") {
  CHECK_FALSE(fm_feasible_point(1, {c({1}, Relation::Gt, 0), c({-1}, Relation::Ge, 0)}));
  CHECK_FALSE(fm_feasible_point(2, {c({1, 1}, Relation::Eq, 1), c({1, 1}, Relation::Eq, 2)}));
  CHECK_FALSE(fm_feasible_point(2, {c({1, 0}, Relation::Ge, 1), c({0, 1}, Relation::Ge, 1),
                                    c({-1, -1}, Relation::Ge, -1)}));
}

TEST_CASE("strictness matters at a single point") {
  CHECK(fm_feasible_point(1, {c({1}, Relation::Ge, 0), c({-1}, Relation::Ge, 0)}));
  CHECK_FALSE(fm_feasible_point(1, {c({1}, Relation::Gt, 0), c({-1}, Relation::Ge, 0)}));
}
