#include <gcenter/compactify.hpp>
#include <gcenter/equilibria.hpp>
#include <gcenter/portrait.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gcenter {

Point disc_projection(const Point& p) {
  double s = 1.0 + std::hypot(p.x, p.y);
  return {p.x / s, p.y / s};
}

namespace {

std::vector<Point> project(const Trajectory& t, int max_points) {
  std::vector<Point> out;
  const std::size_t n = t.points.size();
  const std::size_t stride = std::max<std::size_t>(1, n / std::max(1, max_points));
  for (std::size_t k = 0; k < n; k += stride) out.push_back(disc_projection(t.points[k].x));
  if (n > 0 && (n - 1) % stride != 0) out.push_back(disc_projection(t.points.back().x));
  return out;
}

Point on_boundary(const Point& p) {
  double r = std::hypot(p.x, p.y);
  return {p.x / r, p.y / r};
}

const char* color(OrbitVerdict::Tag tag) {
  switch (tag) {
    case OrbitVerdict::Tag::Periodic: return "#1f77b4";
    case OrbitVerdict::Tag::Escaping: return "#d62728";
    case OrbitVerdict::Tag::Inconclusive: return "#7f7f7f";
  }
  return "#000000";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::vector<PortraitOrbit> portrait_orbits(const VectorField& vf, const PortraitSpec& spec) {
  std::vector<PortraitOrbit> out;
  for (const Point& seed : spec.seeds) {
    PortraitOrbit orbit{seed, OrbitVerdict::Tag::Inconclusive, {}, false};
    Trajectory fwd;
    OrbitVerdict v = return_map_verdict(vf, seed, spec.config, 1.0, &fwd);
    Trajectory* shown = &fwd;
    Trajectory bwd;
    if (v.tag == OrbitVerdict::Tag::Inconclusive) {
      OrbitVerdict back = return_map_verdict(vf, seed, spec.config, -1.0, &bwd);
      if (back.tag == OrbitVerdict::Tag::Escaping) {
        v = back;
        shown = &bwd;
      }
    }
    orbit.tag = v.tag;
    orbit.disc_points = project(*shown, spec.max_points_per_orbit);
    if (v.tag == OrbitVerdict::Tag::Escaping && !shown->points.empty()) {
      orbit.disc_points.push_back(on_boundary(shown->points.back().x));
      orbit.reaches_boundary = true;
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::string render_portrait(const VectorField& vf, const PortraitSpec& spec) {
  const double cx = spec.width / 2.0, cy = spec.height / 2.0;
  const double scale = 0.45 * std::min(spec.width, spec.height);
  auto px = [&](const Point& d) { return fmt(cx + scale * d.x); };
  auto py = [&](const Point& d) { return fmt(cy - scale * d.y); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  svg << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(scale)
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

  for (const auto& orbit : portrait_orbits(vf, spec)) {
    svg << "<polyline class=\"" << to_string(orbit.tag) << "\" fill=\"none\" stroke=\""
        << color(orbit.tag) << "\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < orbit.disc_points.size(); ++k) {
      if (k) svg << ' ';
      svg << px(orbit.disc_points[k]) << ',' << py(orbit.disc_points[k]);
    }
    svg << "\"/>\n";
  }

  auto marker = [&](const Point& d, const char* cls, const char* fill) {
    svg << "<circle class=\"" << cls << "\" cx=\"" << px(d) << "\" cy=\"" << py(d)
        << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
  };
  auto scan = finite_equilibria(vf, from_double(spec.config.escape_radius));
  for (const auto& e : scan.points)
    marker(disc_projection({e.approx_x(), e.approx_y()}), "finite-equilibrium", "#000000");

  InfinityReport inf = infinite_equilibria(vf);
  for (const auto& e : inf.equilibria) {
    Point dir = e.chart == ChartId::U2 ? Point{0.0, 1.0} : on_boundary({1.0, e.u.approx()});
    marker(dir, "infinite-equilibrium", "#2ca02c");
    marker({-dir.x, -dir.y}, "infinite-equilibrium", "#2ca02c");
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gcenter
