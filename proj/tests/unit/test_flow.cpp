#include <gcenter/errors.hpp>
#include <gcenter/flow.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace gcenter;
using gcenter::testing::params;

namespace {

VectorField xy(const std::string& p, const std::string& q) {
  return VectorField(parse_poly(p), parse_poly(q));
}

}  // namespace

TEST_CASE("harmonic oscillator stays on its circle") {
  IntegratorConfig cfg;
  cfg.max_time = 2 * std::numbers::pi;
  Trajectory tr = integrate(xy("y", "-x"), {1, 0}, cfg);
  REQUIRE(tr.points.size() > 10);
  double worst = 0;
  for (const auto& p : tr.points) worst = std::max(worst, std::abs(std::hypot(p.x.x, p.x.y) - 1));
  CHECK(worst < 1e-8);
  CHECK(tr.end == Termination::MaxTime);
  CHECK(tr.points.back().t >= cfg.max_time);
  CHECK(tr.points[tr.points.size() - 2].t < cfg.max_time);
}

TEST_CASE("return map of the linear center") {
  OrbitVerdict v = return_map_verdict(xy("y", "-x"), {1, 0}, IntegratorConfig{});
  CHECK(v.tag == OrbitVerdict::Tag::Periodic);
  CHECK(std::abs(v.time - 2 * std::numbers::pi) < 1e-6);
  CHECK(v.closure_error < 1e-8);
}

TEST_CASE("first integral of the cubic oscillator") {
  VectorField vf = build_system(params({{"b1", -1}, {"d1", -3}}));
  Poly2 h = parse_poly("x^2/2 + x^4 + y^2/2");
  CHECK(lie_derivative(vf, h).is_zero());
  Trajectory tr;
  OrbitVerdict v = return_map_verdict(vf, {1, 0}, IntegratorConfig{}, 1.0, &tr);
  CHECK(v.tag == OrbitVerdict::Tag::Periodic);
  CHECK(first_integral_check(vf, h, tr) < 1e-8);
  CHECK_THROWS_AS(first_integral_check(vf, parse_poly("x^2+y^2"), tr), NotConserved);
}

TEST_CASE("escaping orbit of aa1 with c1 = 4") {
  VectorField vf = build_system(params({{"b1", -1}, {"c1", 4}, {"d1", -3}}));
  Trajectory tr = integrate(vf, {1, 1}, IntegratorConfig{});
  CHECK(tr.end == Termination::Escaped);
  double peak = 0;
  for (const auto& p : tr.points) peak = std::max(peak, std::hypot(p.x.x, p.x.y));
  CHECK(peak > 1e3);
  CHECK(classify_orbit(vf, {1, 0}, IntegratorConfig{}).tag == OrbitVerdict::Tag::Escaping);
}

TEST_CASE("rescaled near field is parallel to the original") {
  VectorField vf = build_system(params({{"a1", 1}, {"b1", -2}, {"c2", 0}}));
  NumericField f(vf);
  for (Point x : {Point{0.3, -0.7}, Point{2, 5}, Point{-40, 3}}) {
    Point w = f(x);
    double r = f.time_rate(x);
    CHECK(w.x == doctest::Approx(r * vf.p().eval(x.x, x.y)).epsilon(1e-12));
    CHECK(w.y == doctest::Approx(r * vf.q().eval(x.x, x.y)).epsilon(1e-12));
  }
}

TEST_CASE("far charts follow the Cartesian field") {
  VectorField vf = build_system(params({{"a1", 1}, {"b1", -2}, {"c1", 1}, {"d1", 3}, {"b2", 1}}));
  const int c[4] = {1, 0, -1, 0}, s[4] = {0, 1, 0, -1};
  for (int k = 0; k < 4; ++k) {
    for (double dir : {1.0, -1.0}) {
      FarField far(vf, k, dir);
      for (Point ul : {Point{0.2, 1.0}, Point{-0.9, 2.5}, Point{1.3, 0.5}}) {
        // x = R_k (1, u) e^l
        double e = std::exp(ul.y);
        double X = (c[k] - s[k] * ul.x) * e, Y = (s[k] + c[k] * ul.x) * e;
        double dX = dir * vf.p().eval(X, Y), dY = dir * vf.q().eval(X, Y);
        double a = c[k] * X + s[k] * Y, b = -s[k] * X + c[k] * Y;
        double da = c[k] * dX + s[k] * dY, db = -s[k] * dX + c[k] * dY;
        double du = (db * a - b * da) / (a * a), dl = da / a;
        Point w = far(ul);
        double r = far.time_rate(ul);
        CHECK(w.x == doctest::Approx(r * du).epsilon(1e-10));
        CHECK(w.y == doctest::Approx(r * dl).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("limit trend in the decoupled regime") {
  // U1 chart of the cubic oscillator x' = y, y' = -x - 4x^3: u' = -4 - v^2 - u^2 v^2,
  // l' = u: u falls without a zero, so the orbit leaves the chart
  FarField far(build_system(params({{"b1", -1}, {"d1", -3}})), 0);
  CHECK(far.limit_trend(0.5) == 0);
  // x' = x(1 + x^2), y' = y(1 + x^2) is radial: u' = 0 and l' > 0
  FarField source(xy("x + x^3", "y + y*x^2"), 0);
  CHECK(source.limit_trend(0.0) == 1);
  FarField sink(xy("x + x^3", "y + y*x^2"), 0, -1.0);
  CHECK(sink.limit_trend(0.0) == -1);
}

TEST_CASE("reversible systems cross-check the return map") {
  // statement (e) with b1 = 1, c1 = -2: invariant under (x, y, t) -> (-x, y, -t), so an orbit
  // that meets the y-axis twice is closed
  VectorField vf = build_system(params({{"b1", 1}, {"c1", -2}, {"d1", 1}}));
  const Poly2 mx = -Poly2::x(), y = Poly2::y();
  REQUIRE(substitute(vf.p(), mx, y) == vf.p());
  REQUIRE(substitute(vf.q(), mx, y) == -vf.q());
  IntegratorConfig cfg;
  for (double y0 : {0.5, 1.0, 2.0, 5.0}) {
    Trajectory tr = integrate(vf, {0, y0}, cfg);
    bool recrossed = false;
    for (std::size_t i = 2; i < tr.points.size() && !recrossed; ++i)
      recrossed = tr.points[i - 1].x.x * tr.points[i].x.x < 0;
    CHECK(recrossed);
    OrbitVerdict v = return_map_verdict(vf, {0, y0}, cfg);
    CHECK(v.tag == OrbitVerdict::Tag::Periodic);
  }
}

TEST_CASE("a tighter closure tolerance never makes an orbit escape") {
  IntegratorConfig loose, tight;
  tight.section_closure_tol = loose.section_closure_tol / 10;
  for (FamilyParams p : {params({{"b1", -1}, {"d1", -3}}), params({{"a1", 1}, {"b1", -2}}),
                         params({{"c1", -1}, {"d1", 1}})}) {
    VectorField vf = build_system(p);
    for (Point x0 : sample_points({1, 5})) {
      OrbitVerdict a = classify_orbit(vf, x0, loose), b = classify_orbit(vf, x0, tight);
      if (a.tag == OrbitVerdict::Tag::Periodic) CHECK(b.tag != OrbitVerdict::Tag::Escaping);
    }
  }
}

TEST_CASE("sample points") {
  auto pts = sample_points({0.5, 2});
  REQUIRE(pts.size() == 2 * kSampleAngles);
  CHECK(std::hypot(pts[0].x, pts[0].y) == doctest::Approx(0.5));
  CHECK(std::hypot(pts.back().x, pts.back().y) == doctest::Approx(2));
}

TEST_CASE("config validation") {
  IntegratorConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.rel_tol = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("global verdicts") {
  IntegratorConfig cfg;
  GlobalVerdict g = global_center_verdict(params({{"b1", 1}, {"c1", -4}, {"d1", 3}}), cfg);
  CHECK(g.tag == GlobalVerdict::Tag::GlobalCenterConsistent);
  CHECK(g.samples.size() == kDefaultRadii.size() * kSampleAngles);
  GlobalVerdict n = global_center_verdict(params({{"b1", -1}, {"c1", 4}, {"d1", -3}}), cfg);
  CHECK(n.tag == GlobalVerdict::Tag::NotGlobal);
  CHECK(n.witness);
  // a second equilibrium at (1, 0)
  GlobalVerdict e = global_center_verdict(xy("y", "-x + x^2"), cfg);
  CHECK(e.tag == GlobalVerdict::Tag::NotGlobal);
  REQUIRE(e.extra_equilibria.size() == 1);
  CHECK(e.extra_equilibria[0].approx_x() == doctest::Approx(1));
  CHECK(e.extra_equilibria[0].approx_y() == doctest::Approx(0));
  // a quadratic center with a second equilibrium outside every closed orbit
  GlobalVerdict f = global_center_verdict(xy("y", "-x - x^2"), cfg, {0.25});
  CHECK(f.tag == GlobalVerdict::Tag::NotGlobal);
  CHECK(f.witness_kind == "finite-equilibrium");
}
