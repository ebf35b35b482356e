#include <gcenter/classify.hpp>
#include <gcenter/compactify.hpp>
#include <gcenter/desing.hpp>
#include <gcenter/errors.hpp>

namespace gcenter {

std::string Spectrum::lambda1_text() const {
  if (is_real) return lambda1.to_string();
  return lambda1.to_string() + " - i*" + imag.to_string();
}

std::string Spectrum::lambda2_text() const {
  if (is_real) return lambda2.to_string();
  return lambda2.to_string() + " + i*" + imag.to_string();
}

Spectrum spectrum(const Matrix2& j) {
  Spectrum s;
  s.trace = j.trace();
  s.det = j.det();
  s.discriminant = s.trace * s.trace - 4 * s.det;
  Rational half = s.trace / 2;
  if (s.discriminant >= 0) {
    s.lambda1 = QuadraticSurd::make(half, Rational(-1, 2), s.discriminant);
    s.lambda2 = QuadraticSurd::make(half, Rational(1, 2), s.discriminant);
    s.imag = QuadraticSurd{0, 0, 1};
  } else {
    s.is_real = false;
    s.lambda1 = s.lambda2 = QuadraticSurd{half, 0, 1};
    s.imag = QuadraticSurd::make(0, Rational(1, 2), -s.discriminant);
  }
  return s;
}

std::string to_string(ClassTag t) {
  switch (t) {
    case ClassTag::HyperbolicSaddle: return "HyperbolicSaddle";
    case ClassTag::HyperbolicNode: return "HyperbolicNode";
    case ClassTag::HyperbolicFocus: return "HyperbolicFocus";
    case ClassTag::LinearCenterCandidate: return "LinearCenterCandidate";
    case ClassTag::SemiHyperbolic: return "SemiHyperbolic";
    case ClassTag::SemiHyperbolicSaddle: return "SemiHyperbolicSaddle";
    case ClassTag::SemiHyperbolicNode: return "SemiHyperbolicNode";
    case ClassTag::SemiHyperbolicSaddleNode: return "SemiHyperbolicSaddleNode";
    case ClassTag::SemiHyperbolicInconclusive: return "SemiHyperbolicInconclusive";
    case ClassTag::NilpotentNeedsBlowup: return "Nilpotent_NeedsBlowup";
    case ClassTag::LinearlyZeroNeedsBlowup: return "LinearlyZero_NeedsBlowup";
  }
  return "?";
}

std::string to_string(const EquilibriumClass& c) {
  std::string s = to_string(c.tag);
  if (c.stability == Stability::Stable) s += "(stable)";
  if (c.stability == Stability::Unstable) s += "(unstable)";
  return s;
}

EquilibriumClass classify_from_jacobian(const Matrix2& j) {
  if (j.is_zero()) return {ClassTag::LinearlyZeroNeedsBlowup};
  Rational tr = j.trace(), det = j.det();
  auto by_trace = [&] { return tr < 0 ? Stability::Stable : Stability::Unstable; };
  if (det < 0) return {ClassTag::HyperbolicSaddle};
  if (det == 0) {
    if (tr == 0) return {ClassTag::NilpotentNeedsBlowup};
    return {ClassTag::SemiHyperbolic};
  }
  if (tr == 0) return {ClassTag::LinearCenterCandidate};
  Rational disc = tr * tr - 4 * det;
  if (disc >= 0) return {ClassTag::HyperbolicNode, by_trace()};
  return {ClassTag::HyperbolicFocus, by_trace()};
}

namespace {

// Coefficient of s^k in a polynomial of the form sum c_i s^i (no second
// variable).
Rational coeff_s(const Poly2& p, int k) { return p.coeff(k, 0); }

Poly2 truncate(const Poly2& p, int max_degree) {
  Poly2 r;
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= max_degree) r += Poly2::monomial(c, m.i, m.j);
  return r;
}

}  // namespace

EquilibriumClass refine_semihyperbolic(const VectorField& vf, const Rational& x,
                                       const Rational& y) {
  if (!vf.vanishes_at(x, y)) throw NotEquilibrium("point is not an equilibrium");
  Matrix2 jac = jacobian_at(vf, x, y);
  Rational lambda = jac.trace();
  if (jac.det() != 0 || lambda == 0)
    throw NotSemiHyperbolic("Jacobian does not have exactly one zero eigenvalue");

  // Kernel vector e0 (slow) and lambda-eigenvector e1 (fast) of jac.
  auto null_vector = [](const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) -> std::array<Rational, 2> {
    // nonzero solution of [[a, b], [c, d]] w = 0 for a rank-one matrix
    if (a != 0 || b != 0) return {-b, a};
    return {-d, c};
  };
  auto e0 = null_vector(jac(0, 0), jac(0, 1), jac(1, 0), jac(1, 1));
  auto e1 = null_vector(jac(0, 0) - lambda, jac(0, 1), jac(1, 0), jac(1, 1) - lambda);
  Matrix2 basis{{e0[0], e1[0], e0[1], e1[1]}};

  VectorField local = linear_change(translate(vf, x, y), basis);
  // local: s' = A(s, f), f' = lambda*f + B(s, f) with A, B of order >= 2.
  const Poly2& a = local.p();
  Poly2 b = local.q() - lambda * Poly2::y();

  const int order = kCenterManifoldOrder;
  Poly2 h;  // f = h(s), stored as polynomial in the first variable
  for (int k = 2; k <= order; ++k) {
    Poly2 hs = partial(h, Var::X);
    Poly2 on_manifold_a = truncate(substitute(a, Poly2::x(), h), k);
    Poly2 on_manifold_b = truncate(substitute(b, Poly2::x(), h), k);
    Poly2 residual = hs * on_manifold_a - on_manifold_b;
    h += Poly2::monomial(coeff_s(residual, k) / lambda, k, 0);
  }
  Poly2 reduced = substitute(a, Poly2::x(), h);
  for (int m = 2; m <= order; ++m) {
    Rational am = coeff_s(reduced, m);
    if (am == 0) continue;
    if (m % 2 == 0) return {ClassTag::SemiHyperbolicSaddleNode};
    if (am * lambda < 0) return {ClassTag::SemiHyperbolicSaddle};
    return {ClassTag::SemiHyperbolicNode, lambda < 0 ? Stability::Stable : Stability::Unstable};
  }
  return {ClassTag::SemiHyperbolicInconclusive};
}

EquilibriumClass classify_equilibrium(const VectorField& vf, const Rational& x,
                                      const Rational& y) {
  if (!vf.vanishes_at(x, y)) throw NotEquilibrium("point is not an equilibrium");
  EquilibriumClass coarse = classify_from_jacobian(jacobian_at(vf, x, y));
  if (coarse.tag == ClassTag::SemiHyperbolic) return refine_semihyperbolic(vf, x, y);
  return coarse;
}

}  // namespace gcenter
