#ifndef GCENTER_POLY_HPP
#define GCENTER_POLY_HPP

#include <gcenter/rational.hpp>

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace gcenter {

enum class Var { X, Y };

// Exponent pair of x^i y^j.
struct Monomial {
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }
  bool operator==(const Monomial&) const = default;
};

// Canonical term order: total degree descending, then exponent of the first
// variable descending. Printing and iteration both follow it.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.i > b.i;
  }
};

// Names used when printing or parsing; the polynomial itself is nameless.
using VarNames = std::array<std::string, 2>;
inline const VarNames kXY{"x", "y"};
inline const VarNames kUV{"u", "v"};

// Sparse bivariate polynomial over Q. No zero coefficient is ever stored.
class Poly2 {
 public:
  using TermMap = std::map<Monomial, Rational, CanonicalOrder>;

  Poly2() = default;
  Poly2(const Rational& c);  // NOLINT: constants convert implicitly
  Poly2(int c);              // NOLINT

  static Poly2 monomial(const Rational& c, int i, int j);
  static Poly2 x() { return monomial(1, 1, 0); }
  static Poly2 y() { return monomial(1, 0, 1); }
  static Poly2 var(Var v) { return v == Var::X ? x() : y(); }

  // -1 for the zero polynomial.
  int degree() const;
  // Lowest total degree of a stored term; -1 for zero.
  int order() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  const TermMap& terms() const { return terms_; }
  Rational coeff(int i, int j) const;

  // Degree in one variable only.
  int degree_in(Var v) const;

  Rational eval(const Rational& x, const Rational& y) const;
  double eval(double x, double y) const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const Rational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }
  friend Poly2 operator-(Poly2 a);
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

Poly2 add(const Poly2& a, const Poly2& b);
Poly2 mul(const Poly2& a, const Poly2& b);
Poly2 pow(const Poly2& a, int k);
Poly2 partial(const Poly2& a, Var var);

// a(sx, sy), fully expanded.
Poly2 substitute(const Poly2& a, const Poly2& sx, const Poly2& sy);

Poly2 homogeneous_part(const Poly2& a, int k);

// Exact quotient a / var^k. Throws NotDivisible if some term has a smaller
// exponent of var.
Poly2 divide_monomial(const Poly2& a, Var var, int k);

// Largest k such that var^k divides a (a nonzero); 0 for the zero polynomial.
int monomial_valuation(const Poly2& a, Var var);

// v^n * a(1/v, u/v) as a polynomial in (u, v). Throws DegreeTooLow if
// n < degree(a).
Poly2 dilate_chart_numerator(const Poly2& a, int n);

// Same clearing for a(u/v, 1/v).
Poly2 dilate_chart_numerator_swapped(const Poly2& a, int n);

// Canonical text: terms in CanonicalOrder, coefficients "p" or "p/q",
// e.g. "4*u^2*v - 1/2*u + 3". The zero polynomial prints as "0".
std::string to_string(const Poly2& p, const VarNames& names = kXY);

// Parses +, -, *, ^ (nonnegative integer exponent), parentheses, division by a
// constant subexpression, rational literals, the two variable names and any
// bound parameter names. Throws ParseError.
Poly2 parse_poly(std::string_view text, const VarNames& names = kXY,
                 const std::map<std::string, Rational>& bindings = {});

}  // namespace gcenter

#endif
