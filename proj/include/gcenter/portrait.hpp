#ifndef GCENTER_PORTRAIT_HPP
#define GCENTER_PORTRAIT_HPP

#include <gcenter/flow.hpp>

#include <string>
#include <vector>

namespace gcenter {

struct PortraitSpec {
  int width = 600;
  int height = 600;
  std::vector<Point> seeds = sample_points(kDefaultRadii);
  IntegratorConfig config;
  int max_points_per_orbit = 1500;
};

// (x, y) / (1 + r): the plane onto the open unit disc.
Point disc_projection(const Point& p);

struct PortraitOrbit {
  Point seed;
  OrbitVerdict::Tag tag;
  std::vector<Point> disc_points;  // already projected
  bool reaches_boundary = false;
};

// Orbits for every seed. Periodic orbits are drawn over one return; escaping
// orbits end on the boundary circle (forward or backward, whichever escaped).
std::vector<PortraitOrbit> portrait_orbits(const VectorField& vf, const PortraitSpec& spec);

// Deterministic SVG text for the field's portrait.
std::string render_portrait(const VectorField& vf, const PortraitSpec& spec);

}  // namespace gcenter

#endif
