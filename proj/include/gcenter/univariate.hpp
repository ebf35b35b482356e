#ifndef GCENTER_UNIVARIATE_HPP
#define GCENTER_UNIVARIATE_HPP

#include <gcenter/poly.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gcenter {

// Dense univariate polynomial over Q, coefficients from the constant term up.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs);
  Poly1(const Rational& c);  // NOLINT
  Poly1(int c);              // NOLINT

  static Poly1 x() { return Poly1(std::vector<Rational>{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& t) const;
  double eval(double t) const;
  int sign_at(const Rational& t) const { return sgn(eval(t)); }

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator-(const Poly1& a) { return Poly1() - a; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend bool operator==(const Poly1&, const Poly1&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Poly1 quotient;
  Poly1 remainder;
};

DivMod divmod(const Poly1& a, const Poly1& b);
// Exact quotient; throws NotDivisible if the remainder is nonzero.
Poly1 exact_div(const Poly1& a, const Poly1& b);
Poly1 derivative(const Poly1& a);
Poly1 monic(const Poly1& a);
// Monic gcd; gcd(0, 0) = 0.
Poly1 gcd(const Poly1& a, const Poly1& b);

// Yun's square-free decomposition: factors[k] has multiplicity k + 1 and is
// monic. Empty factors (constant 1) are kept so indices stay meaningful.
std::vector<Poly1> squarefree_decomposition(const Poly1& a);

// Restriction of a Poly2 to the line where `var` is fixed at `value`, as a
// polynomial in the remaining variable.
Poly1 restrict_to(const Poly2& a, Var fixed, const Rational& value);

std::string to_string(const Poly1& p, const std::string& var = "u");

// a + b*sqrt(d) with d > 0 not a perfect rational square, or b == 0.
struct QuadraticSurd {
  Rational a;
  Rational b;
  Rational d = 1;

  static QuadraticSurd make(const Rational& a, const Rational& b, const Rational& d);
  bool is_rational() const { return b == 0; }
  int sign() const;
  double to_double() const;
  std::string to_string() const;
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

// Exact rational square root when it exists.
std::optional<Rational> rational_sqrt(const Rational& r);

// Closed interval with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval interval_pow(const Interval& a, int k);
// Enclosure of the range of p over the box ix × iy.
Interval eval_interval(const Poly2& p, const Interval& ix, const Interval& iy);

// One real root of a polynomial: an isolating interval (degenerate when the
// root is rational and was hit exactly), the closed form when one is known,
// and its multiplicity.
struct RealRoot {
  Interval where;
  std::optional<QuadraticSurd> exact;
  int multiplicity = 1;

  bool is_point() const { return where.lo == where.hi; }
  double approx() const;
};

// Real roots in increasing order. Square-free parts of degree <= 2 get closed
// forms; higher-degree parts are isolated by Sturm sequences and bisected to
// width <= `width`.
std::vector<RealRoot> real_roots(const Poly1& p, const Rational& width = Rational(1, 1) / (mpz_class(1) << 40));

// Bisects an isolating interval of a square-free polynomial until its width is
// at most `width`. Keeps degenerate intervals as they are.
Interval refine_root(const Poly1& squarefree, Interval where, const Rational& width);

// Number of distinct real roots of p in (lo, hi] by Sturm's theorem.
int count_roots(const Poly1& p, const Rational& lo, const Rational& hi);

// Bound B with every real root in [-B, B] (Cauchy).
Rational root_bound(const Poly1& p);

// Res_y(a, b) as a polynomial in x, via the Sylvester matrix and fraction-free
// elimination over Q[x].
Poly1 resultant_y(const Poly2& a, const Poly2& b);

}  // namespace gcenter

#endif
