#include <gcenter/classify.hpp>
#include <gcenter/errors.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace gcenter;
using gcenter::testing::q;

namespace {

VectorField xy(const std::string& p, const std::string& q) {
  return VectorField(parse_poly(p), parse_poly(q));
}

}  // namespace

TEST_CASE("spectrum") {
  Spectrum s = spectrum(Matrix2{{0, 1, -1, 0}});
  CHECK_FALSE(s.is_real);
  CHECK(s.imag == QuadraticSurd::make(1, 0, 1));
  Spectrum t = spectrum(Matrix2{{1, 1, 1, 0}});
  CHECK(t.is_real);
  CHECK(t.lambda1 == QuadraticSurd::make(q(1, 2), q(-1, 2), 5));
  CHECK(t.lambda2 == QuadraticSurd::make(q(1, 2), q(1, 2), 5));
}

TEST_CASE("hyperbolic classes") {
  CHECK(classify_from_jacobian(diag(-2, 1)).tag == ClassTag::HyperbolicSaddle);
  EquilibriumClass n = classify_from_jacobian(diag(1, 2));
  CHECK(n.tag == ClassTag::HyperbolicNode);
  CHECK(n.stability == Stability::Unstable);
  EquilibriumClass f = classify_from_jacobian(Matrix2{{-1, 2, -2, -1}});
  CHECK(f.tag == ClassTag::HyperbolicFocus);
  CHECK(f.stability == Stability::Stable);
  CHECK(classify_from_jacobian(Matrix2{{0, 1, -1, 0}}).tag == ClassTag::LinearCenterCandidate);
}

TEST_CASE("degenerate classes") {
  CHECK(classify_from_jacobian(Matrix2{}).tag == ClassTag::LinearlyZeroNeedsBlowup);
  CHECK(classify_from_jacobian(Matrix2{{0, 1, 0, 0}}).tag == ClassTag::NilpotentNeedsBlowup);
  CHECK(classify_from_jacobian(diag(0, 3)).tag == ClassTag::SemiHyperbolic);
}

TEST_CASE("semi-hyperbolic refinement") {
  // x' = x^2, y' = -y: saddle-node
  CHECK(refine_semihyperbolic(xy("x^2", "-y"), 0, 0).tag == ClassTag::SemiHyperbolicSaddleNode);
  // x' = x^3, y' = -y: saddle
  CHECK(refine_semihyperbolic(xy("x^3", "-y"), 0, 0).tag == ClassTag::SemiHyperbolicSaddle);
  // x' = -x^3, y' = -y: stable node
  EquilibriumClass n = refine_semihyperbolic(xy("-x^3", "-y"), 0, 0);
  CHECK(n.tag == ClassTag::SemiHyperbolicNode);
  CHECK(n.stability == Stability::Stable);
  // the center manifold y = x^2 carries x' = x*y = x^3, repelling like y
  EquilibriumClass m = refine_semihyperbolic(xy("x*y", "y - x^2"), 0, 0);
  CHECK(m.tag == ClassTag::SemiHyperbolicNode);
  CHECK(m.stability == Stability::Unstable);
  // the same manifold with x' = -x*y against y' = y - x^2
  CHECK(refine_semihyperbolic(xy("-x*y", "y - x^2"), 0, 0).tag == ClassTag::SemiHyperbolicSaddle);
  // a line of equilibria leaves every coefficient zero
  CHECK(refine_semihyperbolic(xy("0", "-y"), 0, 0).tag == ClassTag::SemiHyperbolicInconclusive);
}

TEST_CASE("refinement away from the origin and in a rotated frame") {
  // translated copy of x' = x^3, y' = -y with the point at (1, 2)
  CHECK(refine_semihyperbolic(xy("(x-1)^3", "2-y"), 1, 2).tag == ClassTag::SemiHyperbolicSaddle);
  // kernel along (1, 1): u = x - y, w = x + y with u' = -u, w' = w^2
  VectorField vf = xy("((x+y)^2 - (x-y))/2", "((x+y)^2 + (x-y))/2");
  CHECK(refine_semihyperbolic(vf, 0, 0).tag == ClassTag::SemiHyperbolicSaddleNode);
}

TEST_CASE("refinement errors") {
  CHECK_THROWS_AS(refine_semihyperbolic(xy("x", "y"), 0, 0), NotSemiHyperbolic);
  CHECK_THROWS_AS(refine_semihyperbolic(xy("x^2 + 1", "-y"), 0, 0), NotEquilibrium);
}

TEST_CASE("classify_equilibrium refines automatically") {
  CHECK(classify_equilibrium(xy("x^3", "-y"), 0, 0).tag == ClassTag::SemiHyperbolicSaddle);
  CHECK(classify_equilibrium(xy("y", "-x"), 0, 0).tag == ClassTag::LinearCenterCandidate);
}
