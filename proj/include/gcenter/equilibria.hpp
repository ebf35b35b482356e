#ifndef GCENTER_EQUILIBRIA_HPP
#define GCENTER_EQUILIBRIA_HPP

#include <gcenter/univariate.hpp>
#include <gcenter/vector_field.hpp>

#include <vector>

namespace gcenter {

// A real common zero of p and q, enclosed in a box (degenerate when exact).
struct EquilibriumBox {
  Interval x;
  Interval y;

  bool is_exact() const { return x.lo == x.hi && y.lo == y.hi; }
  double approx_x() const { return x.mid().get_d(); }
  double approx_y() const { return y.mid().get_d(); }
};

struct FiniteEquilibriaScan {
  // False when p and q share a common factor (a resultant vanishes
  // identically), so the real zero set need not be finite.
  bool isolated = true;
  std::vector<EquilibriumBox> points;
};

// Real solutions of p = q = 0 with |x|, |y| <= radius. Candidate coordinates
// are the real roots of Res_y and Res_x; each candidate box is refined until
// rational interval evaluation excludes it or its width drops below 2^-120.
FiniteEquilibriaScan finite_equilibria(const VectorField& vf, const Rational& radius);

}  // namespace gcenter

#endif
