#ifndef GCENTER_VECTOR_FIELD_HPP
#define GCENTER_VECTOR_FIELD_HPP

#include <gcenter/poly.hpp>

#include <array>
#include <string>

namespace gcenter {

// Planar polynomial field (p, q). At least one component is nonzero.
class VectorField {
 public:
  VectorField(Poly2 p, Poly2 q);

  const Poly2& p() const { return p_; }
  const Poly2& q() const { return q_; }
  int effective_degree() const { return std::max(p_.degree(), q_.degree()); }

  bool vanishes_at(const Rational& x, const Rational& y) const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  Poly2 p_;
  Poly2 q_;
};

std::string to_string(const VectorField& vf, const VarNames& names = kXY);

// Row-major 2x2 matrix.
struct Matrix2 {
  std::array<Rational, 4> a{};

  const Rational& operator()(int r, int c) const { return a[2 * r + c]; }
  Rational& operator()(int r, int c) { return a[2 * r + c]; }
  Rational trace() const { return a[0] + a[3]; }
  Rational det() const { return a[0] * a[3] - a[1] * a[2]; }
  bool is_zero() const { return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0; }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

inline Matrix2 diag(const Rational& l, const Rational& m) { return Matrix2{{l, 0, 0, m}}; }

}  // namespace gcenter

#endif
