#include <doctest.h>

#include "lahbell/errors.hpp"
#include "lahbell/numbers.hpp"
#include "lahbell/polys.hpp"

using namespace lahbell;

TEST_CASE("small family members") {
  CHECK(lah_bell_poly(0) == MultiPoly(1));
  CHECK(lah_bell_poly(2).to_string() == "x^2 + 2*x");
  CHECK(bell_poly(3).to_string() == "x^3 + 3*x^2 + x");
  CHECK(bivariate_bell_poly(2).to_string() == "x^2*y^2 - x*y^2 + x*y");
  CHECK(bivariate_lah_bell_poly(2).to_string() == "x^2*y^2 - x*y^2 + 2*x*y");
  CHECK(degenerate_lah_bell_poly(2).to_string() == "x^2 - x*lambda + 2*x");
  CHECK(degenerate_bell_poly(2).to_string() == "x^2 - x*lambda + x");
  CHECK(laguerre_poly(0) == MultiPoly(1));
  CHECK(laguerre_poly(2).to_string() == "x^2 - 2*x*alpha + alpha^2 - 4*x + 3*alpha + 2");
}

TEST_CASE("laguerre degree 3") {
  const MultiPoly a = Alpha();
  const MultiPoly x = X();
  const MultiPoly expected = pow(a, 3) - BigRational(3) * a * a * x + BigRational(6) * a * a +
                             BigRational(3) * a * x * x - BigRational(15) * a * x + BigRational(11) * a - pow(x, 3) +
                             BigRational(9) * x * x - BigRational(18) * x + MultiPoly(6);
  CHECK(laguerre_poly(3) == expected);
  // alpha = 0 gives n! times the plain Laguerre polynomial: 6 - 18x + 9x^2 - x^3.
  CHECK(laguerre_poly(3, MultiPoly(0)) == poly_eval(expected, {{Var::alpha, 0}}));
}

TEST_CASE("specializations") {
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(poly_eval(lah_bell_poly(n), {{Var::x, 1}}) == MultiPoly(lah_bell_number(n)));
    CHECK(poly_eval(bell_poly(n), {{Var::x, 1}}) == MultiPoly(bell_number(n)));
    CHECK(poly_eval(degenerate_lah_bell_poly(n), {{Var::lambda, 0}}) == lah_bell_poly(n));
    CHECK(poly_eval(degenerate_bell_poly(n), {{Var::lambda, 0}}) == bell_poly(n));
    CHECK(bivariate_lah_bell_poly(n).degree(Var::y) == n);
  }
}

TEST_CASE("family names") {
  for (const Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK(all_families().size() == 7);
  CHECK_THROWS_AS(parse_family("hermite"), UnknownNameError);
  CHECK(family_poly(Family::laguerre, 2) == laguerre_poly(2));
}

TEST_CASE("recurrence step") {
  std::vector<MultiPoly> values;
  for (unsigned n = 0; n <= 12; ++n) {
    values.push_back(lah_bell_poly(n));
    CHECK(lah_bell_recurrence_step(n, values) == lah_bell_poly(n + 1));
  }
  CHECK_THROWS_AS(lah_bell_recurrence_step(3, std::vector<MultiPoly>(3)), PreconditionError);
}

TEST_CASE("derivative") {
  for (unsigned n = 1; n <= 15; ++n) CHECK(lah_bell_derivative(n) == lah_bell_poly(n).derivative(Var::x));
  CHECK_THROWS_AS(lah_bell_derivative(0), PreconditionError);
}
