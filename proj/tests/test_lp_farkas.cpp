#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crn/lp.hpp"

using crn::FarkasBranch;
using crn::LinearConstraint;
using crn::LpSystem;
using crn::Rational;
using crn::RationalMatrix;
using crn::Relation;

namespace {

LinearConstraint row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  return {std::move(coeffs), rel, std::move(rhs)};
}

bool satisfies(const LpSystem& sys, const std::vector<Rational>& x) {
  for (std::size_t i = 0; i < sys.num_vars; ++i) {
    const Rational lower = sys.lower_bounds.empty() ? Rational(0) : sys.lower_bounds[i];
    if (x[i] < lower) return false;
  }
  for (const auto& c : sys.constraints) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < sys.num_vars; ++i) lhs += c.coeffs[i] * x[i];
    switch (c.relation) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("feasible interval system") {
  LpSystem sys;
  sys.num_vars = 1;
  sys.constraints = {row({Rational(1)}, Relation::GreaterEq, Rational(1)),
                     row({Rational(1)}, Relation::LessEq, Rational(2))};
  auto out = lp_feasible(sys);
  REQUIRE(out.feasible);
  CHECK(satisfies(sys, out.point));
}

TEST_CASE("infeasible system returns verified multipliers") {
  LpSystem sys;
  sys.num_vars = 1;
  sys.constraints = {row({Rational(1)}, Relation::GreaterEq, Rational(2)),
                     row({Rational(1)}, Relation::LessEq, Rational(1))};
  auto out = lp_feasible(sys);
  CHECK(!out.feasible);
  CHECK(out.multipliers.size() == 2);
}

TEST_CASE("equality constraints") {
  LpSystem sys;
  sys.num_vars = 2;
  sys.constraints = {row({Rational(1), Rational(1)}, Relation::Equal, Rational(1)),
                     row({Rational(1), Rational(-1)}, Relation::Equal, Rational(1, 3))};
  auto out = lp_feasible(sys);
  REQUIRE(out.feasible);
  CHECK(out.point[0] == Rational(2, 3));
  CHECK(out.point[1] == Rational(1, 3));
}

TEST_CASE("lower bounds are honoured") {
  LpSystem sys;
  sys.num_vars = 2;
  sys.lower_bounds = {Rational(1), Rational(0)};
  sys.constraints = {row({Rational(1), Rational(1)}, Relation::LessEq, Rational(3))};
  auto out = lp_feasible(sys);
  REQUIRE(out.feasible);
  CHECK(out.point[0] >= 1);
  CHECK(satisfies(sys, out.point));
}

TEST_CASE("farkas alternative on 1x1 matrices") {
  RationalMatrix plus(1, 1);
  plus.at(0, 0) = 1;
  auto r1 = farkas_alternative(plus);
  CHECK(r1.branch == FarkasBranch::PositiveCertificate);
  CHECK(r1.witness[0] >= 1);

  RationalMatrix minus(1, 1);
  minus.at(0, 0) = -1;
  auto r2 = farkas_alternative(minus);
  CHECK(r2.branch == FarkasBranch::ConeWitness);
  CHECK(r2.witness[0] > 0);
}

TEST_CASE("sign constrained nullvector finds a conservation law") {
  // Gamma of A <-> B.
  auto gamma = RationalMatrix::from_rows({{-1, 1}, {1, -1}});
  auto c = crn::sign_constrained_nullvector(gamma, {0, 1}, {});
  REQUIRE(c.has_value());
  CHECK((*c)[0] >= 1);
  CHECK((*c)[0] == (*c)[1]);

  // A -> 2A admits no semi-conservation vector at all.
  auto growth = RationalMatrix::from_rows({{1}});
  CHECK(!crn::sign_constrained_nullvector(growth, {0}, {}).has_value());

  // Zero-support constraint is enforced.
  auto c2 = crn::sign_constrained_nullvector(
      RationalMatrix::from_rows({{-1, 1}, {1, -1}, {0, 0}}), {0, 1}, {2});
  REQUIRE(c2.has_value());
  CHECK((*c2)[2] == 0);
}

TEST_CASE("farkas dichotomy on random matrices") {
  std::mt19937_64 rng(20240801);
  std::uniform_int_distribution<int> dim_r(1, 4), dim_c(1, 5), entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim_r(rng));
    const std::size_t cols = static_cast<std::size_t>(dim_c(rng));
    RationalMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = entry(rng);

    auto result = farkas_alternative(a);
    if (result.branch == FarkasBranch::PositiveCertificate) {
      REQUIRE(result.witness.size() == rows);
      for (const auto& y : result.witness) CHECK(y >= 1);
      for (const auto& v : a.transposed().apply(result.witness)) CHECK(v >= 0);
    } else {
      REQUIRE(result.witness.size() == cols);
      bool nonzero_image = false;
      const auto image = a.apply(result.witness);
      for (std::size_t j = 0; j < cols; ++j) CHECK(result.witness[j] >= 0);
      for (const auto& v : image) {
        CHECK(v <= 0);
        if (v != 0) nonzero_image = true;
      }
      CHECK(nonzero_image);
    }
  }
}
