#include <gcenter/errors.hpp>
#include <gcenter/poly.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace gcenter;
using gcenter::testing::q;

namespace {

Poly2 P(const std::string& s, const VarNames& names = kXY) { return parse_poly(s, names); }

}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK(partial(P("x^2*y"), Var::X) == P("2*x*y"));
  CHECK(add(P("x^2-1"), P("1-x^2")).is_zero());
  CHECK(mul(P("x+y"), P("x-y")) == P("x^2-y^2"));
  CHECK(pow(P("x+1"), 3) == P("x^3+3*x^2+3*x+1"));
  CHECK(pow(P("x"), 0) == Poly2(1));
}

TEST_CASE("degree, order and coefficients") {
  Poly2 a = P("3*x^2*y - y + 7");
  CHECK(a.degree() == 3);
  CHECK(a.order() == 0);
  CHECK(a.degree_in(Var::X) == 2);
  CHECK(a.coeff(2, 1) == 3);
  CHECK(a.coeff(1, 1) == 0);
  CHECK(Poly2().degree() == -1);
  CHECK(Poly2().order() == -1);
}

TEST_CASE("substitute") {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  CHECK(substitute(P("y^2-x^2"), x, x * y) == P("x^2*(y^2-1)"));
  CHECK(substitute(P("y"), x, x * y) == P("x*y"));
  // v^3 - c1 u^2 v with c1 = -2, blown up vertically
  CHECK(substitute(P("v^3+2*u^2*v", kUV), x, x * y) == P("u^3*v^3+2*u^3*v", kUV));
}

TEST_CASE("homogeneous_part") {
  Poly2 a = P("y + x^3");
  CHECK(homogeneous_part(a, 1) == P("y"));
  CHECK(homogeneous_part(a, 3) == P("x^3"));
  CHECK(homogeneous_part(a, 2).is_zero());
}

TEST_CASE("divide_monomial") {
  CHECK(divide_monomial(P("u^2*(4-v^2)", kUV), Var::X, 1) == P("u*(4-v^2)", kUV));
  CHECK(divide_monomial(P("u^3*v + u^2*v^2", kUV), Var::X, 2) == P("u*v + v^2", kUV));
  CHECK_THROWS_AS(divide_monomial(P("u + v", kUV), Var::X, 1), NotDivisible);
  CHECK(monomial_valuation(P("x^2*y^3 + x*y^5"), Var::Y) == 3);
}

TEST_CASE("dilate_chart_numerator") {
  CHECK(dilate_chart_numerator(P("y"), 3) == P("u*v^2", kUV));
  CHECK(dilate_chart_numerator(P("-x + 12*x^3"), 3) == P("-v^2 + 12", kUV));
  CHECK(dilate_chart_numerator(Poly2(1), 0) == Poly2(1));
  CHECK_THROWS_AS(dilate_chart_numerator(P("x^3"), 2), DegreeTooLow);
}

TEST_CASE("parse and print round trip") {
  std::map<std::string, Rational> b{{"b1", q(-3, 2)}};
  Poly2 a = parse_poly("4*b1*u^2 - (1+u^2)*v^2 + 1/3", kUV, b);
  CHECK(a == P("-6*u^2 - v^2 - u^2*v^2 + 1/3", kUV));
  CHECK(parse_poly(to_string(a, kUV), kUV) == a);
  CHECK_THROWS_AS(parse_poly("x +* y"), ParseError);
  CHECK_THROWS_AS(parse_poly("z"), ParseError);
}

TEST_CASE("rational and double evaluation agree") {
  Poly2 a = P("x^3 - 2*x*y + 1/4");
  CHECK(a.eval(q(1, 2), q(3)) == q(1, 8) - 3 + q(1, 4));
  CHECK(a.eval(0.5, 3.0) == doctest::Approx(0.125 - 3 + 0.25));
}
