#include <gcenter/compactify.hpp>
#include <gcenter/desing.hpp>
#include <gcenter/errors.hpp>
#include <gcenter/family.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace gcenter;
using gcenter::testing::expr;
using gcenter::testing::params;
using gcenter::testing::q;

namespace {

VectorField uv(const std::string& p, const std::string& q) {
  return VectorField(parse_poly(p, kUV), parse_poly(q, kUV));
}

}  // namespace

TEST_CASE("characteristic directions") {
  FamilyParams p = params({{"b1", 1}, {"c1", -4}, {"d1", 3}});
  CharacteristicPoly cp = characteristic_directions(chart_field(build_system(p), ChartId::U2).field);
  CHECK(cp.r == expr("v*(v^2-c1*u^2)", p));
  CHECK_FALSE(cp.vertical_is_characteristic);

  CharacteristicPoly flat = characteristic_directions(uv("u^2", "u*v"));
  CHECK(flat.r.is_zero());
  CHECK(flat.vertical_is_characteristic);

  CharacteristicPoly vert = characteristic_directions(uv("u*v", "5*v^2"));
  CHECK(vert.vertical_is_characteristic);
}

TEST_CASE("vertical blow-up of case (i).1") {
  FamilyParams p = params({{"b1", 1}, {"c1", -4}, {"d1", 3}});
  VectorField u1 = chart_field(build_system(p), ChartId::U1).field;
  VectorField b = vertical_blowup(u1);
  CHECK(b == VectorField(expr("u^2*(2*c1-(1+u^2)*v^2)", p), expr("u*v*(v^2-c1)", p)));
  CHECK(time_rescale(b, Var::X, 1) ==
        VectorField(expr("u*(2*c1-(1+u^2)*v^2)", p), expr("v*(v^2-c1)", p)));
}

TEST_CASE("blow-up and rescale errors") {
  CHECK_THROWS_AS(vertical_blowup(uv("1", "0")), NotDivisible);
  CHECK_THROWS_AS(time_rescale(uv("u", "v"), Var::X, 2), NotDivisible);
  CHECK_THROWS_AS(twist(uv("u", "v"), 0), ZeroAlpha);
}

TEST_CASE("twist, shear and translate are changes of coordinates") {
  VectorField vf = uv("v + u^2", "-u + u*v");
  // x = u, y = u + 2v: u' = x', v' = (y' - x') / 2
  CHECK(twist(vf, 2) == uv("u + 2*v + u^2", "-u - v + u*v"));
  // x = u + 3v, y = v: u' = x' - 3y', v' = y'
  CHECK(shear(uv("v", "-u"), 3) == uv("3*u + 10*v", "-u - 3*v"));
  CHECK(shear(shear(vf, 3), -3) == vf);
  CHECK(translate(translate(vf, 1, q(-1, 2)), -1, q(1, 2)) == vf);
  CHECK(translate(uv("u - 1", "v"), 1, 0) == uv("u", "v"));
  CHECK(linear_change(vf, Matrix2{{1, 0, 1, 2}}) == twist(vf, 2));
}

TEST_CASE("shear choice makes the vertical direction regular") {
  VectorField vf = uv("u*v", "5*v^2");
  CHECK(characteristic_directions(twist(vf, 1)).vertical_is_characteristic);
  Rational b = choose_shear(vf);
  CHECK(b == 1);
  CHECK_FALSE(characteristic_directions(shear(vf, b)).vertical_is_characteristic);
  CHECK_NOTHROW(vertical_blowup(shear(vf, b)));
  CHECK_THROWS_AS(choose_shear(uv("u", "v")), Error);
}

TEST_CASE("chains tag the failing stage") {
  BlowupChain ch(uv("u^2", "v"));
  ch.apply(parse_steps("blowup")[0]);
  CHECK(ch.steps().size() == 1);
  try {
    ch.apply(parse_steps("rescale:v:3")[0]);
    FAIL("expected NotDivisible");
  } catch (const NotDivisible& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("chain depth is bounded") {
  BlowupChain ch(uv("u", "v"));
  for (int k = 0; k < kMaxChainDepth; ++k) ch.apply(parse_steps("shear:1")[0]);
  CHECK_THROWS_AS(ch.apply(parse_steps("shear:1")[0]), ChainTooDeep);
}

TEST_CASE("step parsing") {
  auto s = parse_steps("blowup,rescale:u:1,shear:-1,twist:1/2,translate:1:0");
  REQUIRE(s.size() == 5);
  CHECK(s[0].kind == StepKind::VerticalBlowup);
  CHECK(s[1].kind == StepKind::TimeRescale);
  CHECK(s[2].kind == StepKind::Shear);
  CHECK(s[3].kind == StepKind::Twist);
  CHECK(s[4].kind == StepKind::Translate);
  CHECK_THROWS_AS(parse_steps("explode"), ParseError);
  CHECK_THROWS_AS(parse_steps("rescale:w:1"), ParseError);
}
