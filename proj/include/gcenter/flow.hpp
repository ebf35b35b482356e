#ifndef GCENTER_FLOW_HPP
#define GCENTER_FLOW_HPP

#include <gcenter/equilibria.hpp>
#include <gcenter/family.hpp>
#include <gcenter/vector_field.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gcenter {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_time = 200.0;
  // Radius of the finite-equilibrium scan. Past it orbits are followed in
  // charts at infinity.
  double escape_radius = 1e3;
  double section_closure_tol = 1e-6;
  // Step cap inside escape_radius, so a section cannot be crossed twice
  // within one step.
  double max_step = 0.25;
  double max_steps = 1e6;
  // A return that misses the start is retried with both tolerances divided
  // by 100, up to this many times.
  int refinements = 2;

  // Throws Error unless every field is positive.
  void validate() const;
};

// Polynomial in two variables with double coefficients.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const Poly2& p);
  double operator()(double x, double y) const;

 private:
  struct Term {
    int i;
    int j;
    double c;
  };
  std::vector<Term> terms_;
  int max_power_ = 0;
};

// A planar field integrated in a parameter s; time_rate() is dt/ds for the
// time t of the original system.
class PlanarField {
 public:
  virtual ~PlanarField() = default;
  virtual Point operator()(const Point& p) const = 0;
  virtual double time_rate(const Point& p) const = 0;
};

// The polynomial field divided by w = (1 + |x|^2)^((n-1)/2): the same orbits,
// but linear growth at infinity. `direction` = -1 runs time backwards.
class NumericField : public PlanarField {
 public:
  explicit NumericField(const VectorField& vf, double direction = 1.0);
  Point operator()(const Point& p) const override;
  double time_rate(const Point& p) const override;

 private:
  NumericPoly p_;
  NumericPoly q_;
  double rescale_ = 0.0;
  double direction_;
};

// Neighbourhood of the circle at infinity around the direction k*pi/2, with
// x = R_k (1, u) / v and coordinates (u, l = -log v). The field is the U1
// chart of the rotated system, so it stays polynomial in (u, v) and l can
// grow far beyond what a double radius could hold.
class FarField : public PlanarField {
 public:
  FarField(const VectorField& vf, int quadrant, double direction = 1.0);
  Point operator()(const Point& ul) const override;
  double time_rate(const Point& ul) const override;

  // Once v underflows the chart field is u' = g(u), l' = h(u) with
  // g = u'(u, 0), h = l'(u, 0). From u the orbit then runs into the next zero
  // of g in its direction of motion. Returns the sign of h along the way: +1
  // when l grows for good, -1 when it falls; 0 when that zero lies outside the
  // chart or h changes sign before it.
  int limit_trend(double u) const;

 private:
  NumericPoly du_;
  NumericPoly dl_;
  std::vector<double> g_roots_;
  std::vector<double> h_roots_;
  bool g_zero_ = false;
  bool h_zero_ = false;
  int degree_ = 0;
  double direction_;
};

struct TrajectoryPoint {
  double s;  // integration parameter
  double t;  // time of the original field
  Point x;
  Point dx;  // dx/ds
};

enum class Termination { MaxTime, Escaped, Stopped };

// Cartesian points only; stretches too far out to represent are left out.
struct Trajectory {
  std::vector<TrajectoryPoint> points;
  Termination end = Termination::MaxTime;
};

// Dormand-Prince 5(4) with step-size control. Every accepted step carries the
// field value, which is enough for cubic Hermite interpolation.
class Dopri5 {
 public:
  Dopri5(const PlanarField& f, const IntegratorConfig& cfg, TrajectoryPoint start,
         double max_step);

  const TrajectoryPoint& current() const { return cur_; }
  // Advances by one accepted step. Throws StepUnderflow.
  void step();
  // One uncontrolled step of length h in s from `from`.
  TrajectoryPoint single_step(const TrajectoryPoint& from, double h) const;
  // Restarts the parameter s at zero, keeping the step size.
  void reset_parameter() { cur_.s = 0.0; }

 private:
  const PlanarField& f_;
  IntegratorConfig cfg_;
  TrajectoryPoint cur_;
  double h_;
  double max_step_;
};

// Integrates until max_time, max_steps, or escape; the last point is the
// first one at or past max_time. Throws StepUnderflow.
Trajectory integrate(const VectorField& vf, Point x0, const IntegratorConfig& cfg,
                     double direction = 1.0);

struct OrbitVerdict {
  enum class Tag { Periodic, Escaping, Inconclusive };
  Tag tag = Tag::Inconclusive;
  // Period for Periodic, exit time for Escaping (negative when the escape
  // happens in backward time), time reached otherwise.
  double time = 0.0;
  double closure_error = 0.0;
  double peak_log_radius = 0.0;
  std::string reason;
};

std::string to_string(OrbitVerdict::Tag t);

// The section is the open ray from the origin through x0 (for x0 = (r, 0)
// this is {y = 0, x > 0}), cut down to the points within |x0|/2 of x0.
// Integrates until the orbit crosses it again in the same orientation; the
// crossing is bisected to 1e-12 on the Hermite interpolant and polished by
// Newton steps on the integrator.
OrbitVerdict return_map_verdict(const VectorField& vf, Point x0, const IntegratorConfig& cfg,
                                double direction = 1.0, Trajectory* trajectory = nullptr);

struct SampleResult {
  Point x0;
  OrbitVerdict verdict;
};

struct GlobalVerdict {
  enum class Tag { GlobalCenterConsistent, NotGlobal, Inconclusive };
  Tag tag = Tag::Inconclusive;
  std::optional<Point> witness;
  std::string witness_kind;  // "escaping-orbit" or "finite-equilibrium"
  std::vector<SampleResult> samples;
  std::vector<EquilibriumBox> extra_equilibria;
  bool equilibria_isolated = true;
  bool center_hypothesis = true;
  bool line_at_infinity = false;
  std::string note;
};

std::string to_string(GlobalVerdict::Tag t);

inline const std::vector<double> kDefaultRadii{0.5, 1.0, 2.0, 5.0};
inline constexpr int kSampleAngles = 8;

std::vector<Point> sample_points(const std::vector<double>& radii);

// Forward return map; when inconclusive, the backward orbit is checked for
// escape as well.
OrbitVerdict classify_orbit(const VectorField& vf, Point x0, const IntegratorConfig& cfg);

GlobalVerdict global_center_verdict(const FamilyParams& params, const IntegratorConfig& cfg,
                                    const std::vector<double>& radii = kDefaultRadii);

// Same for an arbitrary field with an equilibrium at the origin.
GlobalVerdict global_center_verdict(const VectorField& vf, const IntegratorConfig& cfg,
                                    const std::vector<double>& radii = kDefaultRadii);

// Lie derivative h_x p + h_y q.
Poly2 lie_derivative(const VectorField& vf, const Poly2& h);

// Max |H(x(t)) - H(x(0))| over the trajectory. Throws NotConserved if the
// Lie derivative of H along vf is not identically zero.
double first_integral_check(const VectorField& vf, const Poly2& h, const Trajectory& traj);

}  // namespace gcenter

#endif
