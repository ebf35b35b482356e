#ifndef GCENTER_CLASSIFY_HPP
#define GCENTER_CLASSIFY_HPP

#include <gcenter/univariate.hpp>
#include <gcenter/vector_field.hpp>

#include <string>

namespace gcenter {

// Eigenvalues of a rational 2x2 matrix. When real they are
// (trace -/+ sqrt(disc)) / 2 in that order; when complex, lambda1/lambda2
// hold the common real part and `imag` the positive imaginary part.
struct Spectrum {
  Rational trace;
  Rational det;
  Rational discriminant;
  bool is_real = true;
  QuadraticSurd lambda1;
  QuadraticSurd lambda2;
  QuadraticSurd imag;

  std::string lambda1_text() const;
  std::string lambda2_text() const;
};

Spectrum spectrum(const Matrix2& j);

enum class ClassTag {
  HyperbolicSaddle,
  HyperbolicNode,
  HyperbolicFocus,
  LinearCenterCandidate,
  SemiHyperbolic,  // coarse: exactly one zero eigenvalue, not yet refined
  SemiHyperbolicSaddle,
  SemiHyperbolicNode,
  SemiHyperbolicSaddleNode,
  SemiHyperbolicInconclusive,
  NilpotentNeedsBlowup,
  LinearlyZeroNeedsBlowup,
};

enum class Stability { None, Stable, Unstable };

struct EquilibriumClass {
  ClassTag tag;
  Stability stability = Stability::None;

  friend bool operator==(const EquilibriumClass&, const EquilibriumClass&) = default;
};

std::string to_string(ClassTag t);
std::string to_string(const EquilibriumClass& c);

EquilibriumClass classify_from_jacobian(const Matrix2& j);

inline constexpr int kCenterManifoldOrder = 6;

// Semi-hyperbolic refinement: moves `point` to the origin, diagonalises the
// linear part as (0, lambda), expands the center manifold to order 6 and
// reads the first nonzero coefficient a_m of the reduced dynamics.
// Throws NotSemiHyperbolic unless the Jacobian has exactly one zero
// eigenvalue; throws NotEquilibrium if vf does not vanish at the point.
EquilibriumClass refine_semihyperbolic(const VectorField& vf, const Rational& x,
                                       const Rational& y);

// Coarse class, refined when semi-hyperbolic.
EquilibriumClass classify_equilibrium(const VectorField& vf, const Rational& x,
                                      const Rational& y);

}  // namespace gcenter

#endif
