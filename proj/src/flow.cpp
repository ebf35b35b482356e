#include <gcenter/compactify.hpp>
#include <gcenter/errors.hpp>
#include <gcenter/flow.hpp>
#include <gcenter/univariate.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

namespace gcenter {

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0 && abs_tol > 0 && max_time > 0 && escape_radius > 0 &&
        section_closure_tol > 0 && max_step > 0 && max_steps > 0 &&
        refinements >= 0))
    throw Error("integrator configuration values must be positive (refinements non-negative)");
}

NumericPoly::NumericPoly(const Poly2& p) {
  for (const auto& [m, c] : p.terms()) {
    terms_.push_back({m.i, m.j, c.get_d()});
    max_power_ = std::max({max_power_, m.i, m.j});
  }
}

double NumericPoly::operator()(double x, double y) const {
  double xp[8] = {1}, yp[8] = {1};
  const int n = std::min(max_power_, 7);
  for (int k = 1; k <= n; ++k) {
    xp[k] = xp[k - 1] * x;
    yp[k] = yp[k - 1] * y;
  }
  double acc = 0.0;
  for (const auto& t : terms_) {
    double xi = t.i <= n ? xp[t.i] : std::pow(x, t.i);
    double yj = t.j <= n ? yp[t.j] : std::pow(y, t.j);
    acc += t.c * xi * yj;
  }
  return acc;
}

NumericField::NumericField(const VectorField& vf, double direction)
    : p_(vf.p()), q_(vf.q()), direction_(direction) {
  rescale_ = 0.5 * std::max(0, vf.effective_degree() - 1);
}

double NumericField::time_rate(const Point& pt) const {
  if (rescale_ == 0.0) return 1.0;
  double w = 1.0 + pt.x * pt.x + pt.y * pt.y;
  return rescale_ == 1.0 ? 1.0 / w : std::pow(w, -rescale_);
}

Point NumericField::operator()(const Point& pt) const {
  const double k = direction_ * time_rate(pt);
  return {k * p_(pt.x, pt.y), k * q_(pt.x, pt.y)};
}

namespace {

// Columns of the rotation by k*pi/2.
constexpr int kCos[4] = {1, 0, -1, 0};
constexpr int kSin[4] = {0, 1, 0, -1};

VectorField rotated(const VectorField& vf, int k) {
  const Rational c = kCos[k], s = kSin[k];
  const Poly2 x = Poly2::x(), y = Poly2::y();
  Poly2 p = substitute(vf.p(), c * x - s * y, s * x + c * y);
  Poly2 q = substitute(vf.q(), c * x - s * y, s * x + c * y);
  return VectorField(c * p + s * q, c * q - s * p);
}

}  // namespace

FarField::FarField(const VectorField& vf, int quadrant, double direction)
    : direction_(direction) {
  ChartField cf = chart_field(rotated(vf, quadrant), ChartId::U1);
  degree_ = cf.n_used;
  du_ = NumericPoly(cf.field.p());
  // l' = -v'/v; the v-component is divisible by v.
  Poly2 dl = -divide_monomial(cf.field.q(), Var::Y, 1);
  dl_ = NumericPoly(dl);
  auto roots = [](const Poly1& p, std::vector<double>& out, bool& zero) {
    zero = p.is_zero();
    if (zero) return;
    for (const auto& r : real_roots(p)) out.push_back(r.approx());
  };
  roots(restrict_to(cf.field.p(), Var::Y, 0), g_roots_, g_zero_);
  roots(restrict_to(dl, Var::Y, 0), h_roots_, h_zero_);
}

int FarField::limit_trend(double u) const {
  if (h_zero_) return 0;
  const double g = direction_ * du_(u, 0.0);
  double target = u;
  if (!g_zero_ && g != 0.0) {
    const double dir = g > 0 ? 1.0 : -1.0;
    target = std::numeric_limits<double>::infinity();
    for (double r : g_roots_)
      if ((r - u) * dir > 0 && std::abs(r - u) < std::abs(target - u)) target = r;
    if (!std::isfinite(target) || std::abs(target) > 2.0) return 0;
  }
  const double lo = std::min(u, target), hi = std::max(u, target);
  const double eps = 1e-12 * std::max(1.0, std::abs(target));
  for (double r : h_roots_)
    if (r > lo - eps && r < hi + eps && std::abs(r - target) > eps) return 0;
  const double hv = direction_ * dl_(u, 0.0);
  if (hv == 0.0) return 0;
  return hv > 0 ? 1 : -1;
}

Point FarField::operator()(const Point& ul) const {
  const double v = std::exp(-ul.y);
  return {direction_ * du_(ul.x, v), direction_ * dl_(ul.x, v)};
}

double FarField::time_rate(const Point& ul) const {
  return std::exp(-(degree_ - 1) * ul.y);
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kE[7] = {71.0 / 57600,  0, -71.0 / 16695, 71.0 / 1920, -17253.0 / 339200,
                          22.0 / 525, -1.0 / 40};

struct StepResult {
  Point x;
  Point dx;
  double dt;   // increment of the original time
  double err;  // scaled RMS error estimate
};

StepResult dopri_step(const PlanarField& f, const Point& x0, const Point& k0, double h,
                      const IntegratorConfig& cfg) {
  Point k[7];
  k[0] = k0;
  double rate[6];
  rate[0] = f.time_rate(x0);
  Point xs = x0;
  for (int s = 1; s < 7; ++s) {
    xs = x0;
    for (int j = 0; j < s; ++j) {
      xs.x += h * kA[s][j] * k[j].x;
      xs.y += h * kA[s][j] * k[j].y;
    }
    k[s] = f(xs);
    if (s < 6) rate[s] = f.time_rate(xs);
  }
  // the last stage sits at the 5th-order solution (FSAL)
  double dt = 0.0;
  for (int j = 0; j < 6; ++j) dt += kA[6][j] * rate[j];
  Point ex{0, 0};
  for (int j = 0; j < 7; ++j) {
    ex.x += h * kE[j] * k[j].x;
    ex.y += h * kE[j] * k[j].y;
  }
  double sx = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(x0.x), std::abs(xs.x));
  double sy = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(x0.y), std::abs(xs.y));
  double err = std::sqrt(0.5 * ((ex.x / sx) * (ex.x / sx) + (ex.y / sy) * (ex.y / sy)));
  if (!std::isfinite(err) || !std::isfinite(xs.x) || !std::isfinite(xs.y) ||
      !std::isfinite(k[6].x) || !std::isfinite(k[6].y))
    err = std::numeric_limits<double>::infinity();
  return {xs, k[6], h * dt, err};
}

double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
double norm(const Point& a) { return std::hypot(a.x, a.y); }

}  // namespace

Dopri5::Dopri5(const PlanarField& f, const IntegratorConfig& cfg, TrajectoryPoint start,
               double max_step)
    : f_(f), cfg_(cfg), cur_(start), h_(std::min(1e-2, max_step)), max_step_(max_step) {
  cur_.dx = f(cur_.x);
}

void Dopri5::step() {
  while (true) {
    if (h_ < 1e-14 * std::max(1.0, std::abs(cur_.s)))
      throw StepUnderflow("step size underflow at t = " + std::to_string(cur_.t));
    StepResult r = dopri_step(f_, cur_.x, cur_.dx, h_, cfg_);
    double factor = r.err == 0 ? 5.0 : std::clamp(0.9 * std::pow(r.err, -0.2), 0.2, 5.0);
    if (r.err <= 1.0) {
      cur_ = {cur_.s + h_, cur_.t + r.dt, r.x, r.dx};
      h_ = std::min(h_ * factor, max_step_);
      return;
    }
    h_ *= std::max(factor, 0.1);
  }
}

TrajectoryPoint Dopri5::single_step(const TrajectoryPoint& from, double h) const {
  if (h == 0.0) return from;
  StepResult r = dopri_step(f_, from.x, from.dx, h, cfg_);
  return {from.s + h, from.t + r.dt, r.x, r.dx};
}

namespace {

constexpr double kDecoupled = 746.0;

// Follows one orbit, in Cartesian coordinates inside escape_radius and in the
// charts of FarField outside it.
class OrbitRun {
 public:
  OrbitRun(const VectorField& vf, const IntegratorConfig& cfg, Point x0, double direction)
      : cfg_(cfg),
        near_field_(vf, direction),
        far_fields_{FarField(vf, 0, direction), FarField(vf, 1, direction),
                    FarField(vf, 2, direction), FarField(vf, 3, direction)},
        log_switch_(std::log(std::max(cfg.escape_radius, 4 * norm(x0)))) {
    stepper_.emplace(near_field_, cfg_, TrajectoryPoint{0.0, 0.0, x0, {}}, cfg_.max_step);
    peak_ = std::log(norm(x0));
  }

  // One accepted step, then any change of chart. last_step() is the step just
  // taken, in the coordinates it was taken in.
  void step() {
    prev_ = stepper_->current();
    prev_quadrant_ = quadrant_;
    stepper_->step();
    ++steps_;
    const TrajectoryPoint cur = stepper_->current();
    last_ = cur;
    if (quadrant_ < 0) {
      double r = norm(cur.x);
      peak_ = std::max(peak_, std::log(r));
      if (std::log(r) > log_switch_ && dot(cur.x, cur.dx) > 0) {
        int k = best_quadrant(cur.x);
        double a = kCos[k] * cur.x.x + kSin[k] * cur.x.y;
        double b = -kSin[k] * cur.x.x + kCos[k] * cur.x.y;
        enter(k, {b / a, std::log(a)}, cur);
      }
      return;
    }
    // s only orders the steps out here; keeping it small keeps the step
    // underflow test meaningful
    stepper_->reset_parameter();
    const Point ul = cur.x;
    const Point d = direction_of(quadrant_, ul.x);
    const double log_r = ul.y + std::log(norm(d));
    peak_ = std::max(peak_, log_r);
    if (log_r < log_switch_ - std::numbers::ln2) {
      const double r = std::exp(ul.y);
      quadrant_ = -1;
      lap_start_.reset();
      stepper_.emplace(near_field_, cfg_, TrajectoryPoint{cur.s, cur.t, {r * d.x, r * d.y}, {}},
                       cfg_.max_step);
    } else if (std::abs(ul.x) > 1.5) {
      int k = best_quadrant(d);
      double a = kCos[k] * d.x + kSin[k] * d.y;
      double b = -kSin[k] * d.x + kCos[k] * d.y;
      enter(k, {b / a, ul.y + std::log(a)}, cur);
    }
  }

  bool last_step_near() const { return prev_quadrant_ < 0; }
  const TrajectoryPoint& prev() const { return prev_; }
  // The point reached by last_step(), before any change of chart.
  TrajectoryPoint last_point() const { return last_; }
  const PlanarField& near_field() const { return near_field_; }

  bool escaped() const {
    if (quadrant_ < 0) return false;
    const TrajectoryPoint& p = stepper_->current();
    return lap_gain_ || (p.x.y > kDecoupled && far_fields_[quadrant_].limit_trend(p.x.x) > 0);
  }
  double time() const { return stepper_->current().t; }
  double steps() const { return steps_; }
  double peak_log_radius() const { return peak_; }

  // Current point in Cartesian coordinates, if it fits in a double with room
  // for evaluating polynomials there.
  std::optional<TrajectoryPoint> cartesian() const {
    TrajectoryPoint p = stepper_->current();
    if (quadrant_ < 0) return p;
    if (p.x.y > 200) return std::nullopt;
    const Point d = direction_of(quadrant_, p.x.x);
    const double r = std::exp(p.x.y);
    p.x = {r * d.x, r * d.y};
    p.dx = near_field_(p.x);
    return p;
  }

 private:
  static int best_quadrant(const Point& x) {
    int best = 0;
    for (int k = 1; k < 4; ++k)
      if (kCos[k] * x.x + kSin[k] * x.y > kCos[best] * x.x + kSin[best] * x.y) best = k;
    return best;
  }
  static Point direction_of(int k, double u) {
    return {kCos[k] - kSin[k] * u, kSin[k] + kCos[k] * u};
  }

  void enter(int k, Point ul, const TrajectoryPoint& at) {
    // With v negligible the chart flow does not depend on l, so a full turn
    // round the circle that ends higher than it started repeats for ever.
    if (k == 0 && quadrant_ >= 0 && ul.y > kDecoupled) {
      if (lap_start_ && ul.y > *lap_start_) lap_gain_ = true;
      lap_start_ = ul.y;
    }
    if (ul.y <= kDecoupled) lap_start_.reset();
    quadrant_ = k;
    stepper_.emplace(far_fields_[k], cfg_, TrajectoryPoint{at.s, at.t, ul, {}},
                     std::numeric_limits<double>::infinity());
  }

  const IntegratorConfig& cfg_;
  NumericField near_field_;
  FarField far_fields_[4];
  double log_switch_;
  std::optional<Dopri5> stepper_;
  int quadrant_ = -1;  // -1 while inside escape_radius
  int prev_quadrant_ = -1;
  TrajectoryPoint prev_{};
  TrajectoryPoint last_{};
  double steps_ = 0;
  double peak_ = 0;
  std::optional<double> lap_start_;
  bool lap_gain_ = false;
};

}  // namespace

Trajectory integrate(const VectorField& vf, Point x0, const IntegratorConfig& cfg,
                     double direction) {
  cfg.validate();
  if (!std::isfinite(x0.x) || !std::isfinite(x0.y)) throw Error("initial condition not finite");
  Trajectory traj;
  if (x0.x == 0 && x0.y == 0) {
    traj.points.push_back({0, 0, x0, {0, 0}});
    return traj;
  }
  OrbitRun run(vf, cfg, x0, direction);
  traj.points.push_back(*run.cartesian());
  while (run.steps() < cfg.max_steps) {
    run.step();
    if (auto p = run.cartesian()) traj.points.push_back(*p);
    if (run.escaped()) {
      traj.end = Termination::Escaped;
      return traj;
    }
    if (run.time() >= cfg.max_time) break;
  }
  traj.end = Termination::MaxTime;
  return traj;
}

std::string to_string(OrbitVerdict::Tag t) {
  switch (t) {
    case OrbitVerdict::Tag::Periodic: return "Periodic";
    case OrbitVerdict::Tag::Escaping: return "Escaping";
    case OrbitVerdict::Tag::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(GlobalVerdict::Tag t) {
  switch (t) {
    case GlobalVerdict::Tag::GlobalCenterConsistent: return "GlobalCenterConsistent";
    case GlobalVerdict::Tag::NotGlobal: return "NotGlobal";
    case GlobalVerdict::Tag::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

OrbitVerdict return_map_attempt(const VectorField& vf, Point x0, const IntegratorConfig& cfg,
                                double direction, Trajectory* trajectory) {
  OrbitVerdict verdict;
  const double r0 = norm(x0);
  if (r0 == 0.0) {
    verdict.reason = "initial condition is the origin";
    return verdict;
  }
  const Point e{x0.x / r0, x0.y / r0};
  auto sigma = [&](const Point& p) { return e.x * p.y - e.y * p.x; };

  OrbitRun run(vf, cfg, x0, direction);
  const TrajectoryPoint start = *run.cartesian();
  const double ds0 = sigma(start.dx);
  if (std::abs(ds0) <= 1e-12 * std::max(1.0, norm(start.dx))) {
    verdict.reason = "field is tangent to the section at the initial condition";
    return verdict;
  }
  const double orient = ds0 > 0 ? 1.0 : -1.0;
  if (trajectory) {
    trajectory->points.assign(1, start);
    trajectory->end = Termination::MaxTime;
  }
  const Dopri5 polisher(run.near_field(), cfg, start, cfg.max_step);

  try {
    while (true) {
      run.step();
      verdict.peak_log_radius = run.peak_log_radius();
      if (trajectory)
        if (auto p = run.cartesian()) trajectory->points.push_back(*p);

      const TrajectoryPoint prev = run.prev(), cur = run.last_point();
      const double sp = orient * sigma(prev.x), sc = orient * sigma(cur.x);
      if (run.last_step_near() && sp < 0 && sc >= 0) {
        // Cubic Hermite interpolant of sigma on [prev.s, cur.s].
        const double h = cur.s - prev.s;
        const double d0 = orient * sigma(prev.dx) * h, d1 = orient * sigma(cur.dx) * h;
        auto interp = [&](double u) {
          double u2 = u * u, u3 = u2 * u;
          return (2 * u3 - 3 * u2 + 1) * sp + (u3 - 2 * u2 + u) * d0 + (-2 * u3 + 3 * u2) * sc +
                 (u3 - u2) * d1;
        };
        double lo = 0.0, hi = 1.0;
        while ((hi - lo) * h > 1e-12) {
          double mid = 0.5 * (lo + hi);
          (interp(mid) < 0 ? lo : hi) = mid;
        }
        double tau = 0.5 * (lo + hi) * h;
        TrajectoryPoint hit = polisher.single_step(prev, tau);
        for (int it = 0; it < 4; ++it) {
          double ds = sigma(hit.dx);
          if (ds == 0.0) break;
          double next = std::clamp(tau - sigma(hit.x) / ds, 0.0, h);
          if (std::abs(next - tau) < 1e-15) break;
          tau = next;
          hit = polisher.single_step(prev, tau);
        }
        const double miss = std::hypot(hit.x.x - x0.x, hit.x.y - x0.y);
        if (dot(e, hit.x) > 0 && miss <= 0.5 * r0) {
          if (trajectory) {
            trajectory->points.back() = hit;
            trajectory->end = Termination::Stopped;
          }
          verdict.time = hit.t;
          verdict.closure_error = miss;
          if (miss < cfg.section_closure_tol) {
            verdict.tag = OrbitVerdict::Tag::Periodic;
          } else {
            std::ostringstream msg;
            msg << "first return misses the start by " << miss;
            verdict.reason = msg.str();
          }
          return verdict;
        }
      }
      if (run.escaped()) {
        if (trajectory) trajectory->end = Termination::Escaped;
        verdict.tag = OrbitVerdict::Tag::Escaping;
        verdict.time = direction * run.time();
        return verdict;
      }
      if (run.time() >= cfg.max_time) {
        verdict.time = run.time();
        verdict.reason = "no return to the section before max_time";
        return verdict;
      }
      if (run.steps() >= cfg.max_steps) {
        verdict.time = run.time();
        verdict.reason = "no return to the section within max_steps";
        return verdict;
      }
    }
  } catch (const StepUnderflow& err) {
    verdict.time = run.time();
    verdict.reason = err.what();
    return verdict;
  }
}

}  // namespace

OrbitVerdict return_map_verdict(const VectorField& vf, Point x0, const IntegratorConfig& cfg,
                                double direction, Trajectory* trajectory) {
  cfg.validate();
  IntegratorConfig c = cfg;
  OrbitVerdict v = return_map_attempt(vf, x0, c, direction, trajectory);
  for (int k = 0; k < cfg.refinements && v.tag == OrbitVerdict::Tag::Inconclusive &&
                  v.closure_error > 0;
       ++k) {
    c.rel_tol /= 100;
    c.abs_tol /= 100;
    v = return_map_attempt(vf, x0, c, direction, trajectory);
  }
  return v;
}

std::vector<Point> sample_points(const std::vector<double>& radii) {
  std::vector<Point> pts;
  for (double r : radii) {
    for (int k = 0; k < kSampleAngles; ++k) {
      double theta = 2.0 * std::numbers::pi * k / kSampleAngles;
      pts.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
  }
  return pts;
}

OrbitVerdict classify_orbit(const VectorField& vf, Point x0, const IntegratorConfig& cfg) {
  OrbitVerdict fwd = return_map_verdict(vf, x0, cfg, 1.0);
  if (fwd.tag != OrbitVerdict::Tag::Inconclusive) return fwd;
  OrbitVerdict bwd = return_map_verdict(vf, x0, cfg, -1.0);
  if (bwd.tag == OrbitVerdict::Tag::Escaping) return bwd;
  return fwd;
}

namespace {

// Runs job(i) for i in [0, n) on a small worker pool; results land in index
// order, so the outcome does not depend on scheduling.
template <typename Job>
void parallel_for(std::size_t n, Job job) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w + 1 < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) job(i);
    });
  for (std::size_t i = next++; i < n; i = next++) job(i);
  for (auto& t : pool) t.join();
}

}  // namespace

GlobalVerdict global_center_verdict(const VectorField& vf, const IntegratorConfig& cfg,
                                    const std::vector<double>& radii) {
  cfg.validate();
  GlobalVerdict gv;
  auto scan = finite_equilibria(vf, from_double(cfg.escape_radius));
  gv.equilibria_isolated = scan.isolated;
  for (const auto& eq : scan.points) {
    bool origin = eq.is_exact() && eq.x.lo == 0 && eq.y.lo == 0;
    if (!origin) gv.extra_equilibria.push_back(eq);
  }

  auto pts = sample_points(radii);
  gv.samples.resize(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    gv.samples[i] = {pts[i], classify_orbit(vf, pts[i], cfg)};
  });

  for (const auto& s : gv.samples) {
    if (s.verdict.tag == OrbitVerdict::Tag::Escaping) {
      gv.tag = GlobalVerdict::Tag::NotGlobal;
      gv.witness = s.x0;
      gv.witness_kind = "escaping-orbit";
      return gv;
    }
  }
  if (!gv.extra_equilibria.empty()) {
    gv.tag = GlobalVerdict::Tag::NotGlobal;
    gv.witness = Point{gv.extra_equilibria[0].approx_x(), gv.extra_equilibria[0].approx_y()};
    gv.witness_kind = "finite-equilibrium";
    return gv;
  }
  if (!gv.equilibria_isolated) {
    gv.tag = GlobalVerdict::Tag::Inconclusive;
    gv.note = "p and q share a common factor; finite equilibria are not isolated";
    return gv;
  }
  bool all_periodic = std::all_of(gv.samples.begin(), gv.samples.end(), [](const SampleResult& s) {
    return s.verdict.tag == OrbitVerdict::Tag::Periodic;
  });
  gv.tag = all_periodic ? GlobalVerdict::Tag::GlobalCenterConsistent
                        : GlobalVerdict::Tag::Inconclusive;
  return gv;
}

GlobalVerdict global_center_verdict(const FamilyParams& params, const IntegratorConfig& cfg,
                                    const std::vector<double>& radii) {
  VectorField vf = build_system(params);
  GlobalVerdict gv = global_center_verdict(vf, cfg, radii);
  gv.center_hypothesis = center_cases(params).is_center();
  gv.line_at_infinity = infinite_equilibria(vf).line_of_equilibria;
  if (!gv.center_hypothesis)
    gv.note += std::string(gv.note.empty() ? "" : "; ") +
               "warning: parameters satisfy none of the center conditions";
  if (gv.line_at_infinity)
    gv.note += std::string(gv.note.empty() ? "" : "; ") +
               "the circle at infinity is a line of equilibria; the global-center "
               "characterisation does not apply";
  return gv;
}

Poly2 lie_derivative(const VectorField& vf, const Poly2& h) {
  return partial(h, Var::X) * vf.p() + partial(h, Var::Y) * vf.q();
}

double first_integral_check(const VectorField& vf, const Poly2& h, const Trajectory& traj) {
  Poly2 lie = lie_derivative(vf, h);
  if (!lie.is_zero()) throw NotConserved("Lie derivative is " + to_string(lie));
  if (traj.points.empty()) return 0.0;
  const double h0 = h.eval(traj.points.front().x.x, traj.points.front().x.y);
  double drift = 0.0;
  for (const auto& p : traj.points) drift = std::max(drift, std::abs(h.eval(p.x.x, p.x.y) - h0));
  return drift;
}

}  // namespace gcenter
