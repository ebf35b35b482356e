#include <gcenter/commands.hpp>
#include <gcenter/errors.hpp>
#include <gcenter/portrait.hpp>
#include <gcenter/serialize.hpp>

#include <doctest.h>

#include <cmath>

using namespace gcenter;

namespace {

std::string params_text(const std::string& overrides) {
  std::string base = R"("a1": 0, "a2": 0, "b1": 0, "b2": 0, "c1": 0, "c2": 0, "d1": 0, "d2": 0)";
  Json j = Json::parse("{" + base + "}");
  Json o = Json::parse("{" + overrides + "}");
  for (const auto& [k, v] : o.items()) j[k] = v;
  return j.dump();
}

}  // namespace

TEST_CASE("params schema") {
  FamilyParams p = parse_params(params_text(R"("b1": "-1/2", "c1": 3)"));
  CHECK(p.b1 == Rational(-1, 2));
  CHECK(p.c1 == 3);
  CHECK(params_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(parse_params("{"), ParseError);
  CHECK_THROWS_AS(parse_params(R"({"a1": 0})"), ParseError);
  CHECK_THROWS_AS(parse_params(params_text(R"("e1": 1)")), ParseError);
  CHECK_THROWS_AS(parse_params(params_text(R"("a1": 0.5)")), ParseError);
  CHECK_THROWS_AS(parse_params(params_text(R"("a1": "1/0")")), ParseError);
}

TEST_CASE("decide") {
  CommandResult a = cmd_decide(params_text(R"("b1": 1, "c1": -4, "d1": 3)"));
  CHECK(a.exit_code == exit_code::kGlobal);
  Json j = Json::parse(a.output);
  CHECK(j["global"]["statements"] == Json::array({"a"}));
  CHECK(cmd_decide(params_text(R"("c2": 1)")).exit_code == exit_code::kNoCenter);
  CHECK(cmd_decide(params_text(R"("b1": -1, "c1": 4, "d1": -3)")).exit_code ==
        exit_code::kCenterNotGlobal);
  CommandResult bad = cmd_decide("not json");
  CHECK(bad.exit_code == exit_code::kParseError);
  CHECK_FALSE(bad.error.empty());
  CHECK(bad.output.empty());
}

TEST_CASE("compactify and blowup") {
  std::string p = params_text(R"("b1": 1, "c1": -4, "d1": 3)");
  CommandResult c = cmd_compactify(p, "u1");
  REQUIRE(c.exit_code == 0);
  Json cj = Json::parse(c.output);
  CHECK(parse_poly(cj["field"]["p"].get<std::string>(), kUV) ==
        parse_poly("-8*u^2 - v^2 - u^2*v^2", kUV));
  CommandResult b = cmd_blowup(p, "u1", "blowup,rescale:u:1");
  REQUIRE(b.exit_code == 0);
  Json bj = Json::parse(b.output);
  REQUIRE(bj["stages"].size() == 3);
  CHECK(parse_poly(bj["stages"][2]["p"].get<std::string>(), kUV) ==
        parse_poly("u*(-8-(1+u^2)*v^2)", kUV));
  CommandResult bad = cmd_blowup(p, "u1", "blowup,rescale:u:5");
  CHECK(bad.exit_code == exit_code::kComputeError);
  CHECK(bad.error.find("stage 2") != std::string::npos);
  CHECK(cmd_blowup(p, "u1", "explode").exit_code == exit_code::kParseError);
}

TEST_CASE("verify") {
  IntegratorConfig cfg;
  CommandResult g = cmd_verify(params_text(R"("b1": -1, "d1": -3)"), cfg, {0.5, 2});
  CHECK(g.exit_code == exit_code::kConsistent);
  CHECK(Json::parse(g.output)["verdict"] == "GlobalCenterConsistent");
  CommandResult n = cmd_verify(params_text(R"("b1": -1, "c1": 4, "d1": -3)"), cfg, {0.5, 2});
  CHECK(n.exit_code == exit_code::kNotGlobal);
  CHECK(parse_radii("0.5,1,2") == std::vector<double>{0.5, 1, 2});
  CHECK_THROWS_AS(parse_radii("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_radii("-1"), ParseError);
}

TEST_CASE("portrait") {
  Point d = disc_projection({3, 4});
  CHECK(std::hypot(d.x, d.y) == doctest::Approx(5.0 / 6.0));
  PortraitSpec spec;
  spec.seeds = sample_points({0.5, 2});
  std::string p = params_text(R"("b1": -1, "c1": 4, "d1": -3)");
  CommandResult a = cmd_portrait(p, spec), b = cmd_portrait(p, spec);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("<svg", 0) == 0);
  auto orbits = portrait_orbits(build_system(parse_params(p)), spec);
  bool boundary = false;
  for (const auto& o : orbits)
    for (const auto& q : o.disc_points) CHECK(std::hypot(q.x, q.y) <= 1.0);
  for (const auto& o : orbits) boundary = boundary || o.reaches_boundary;
  CHECK(boundary);
}
