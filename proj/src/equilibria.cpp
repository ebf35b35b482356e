#include <gcenter/equilibria.hpp>

namespace gcenter {

namespace {

struct Candidate {
  Poly1 squarefree;
  Interval where;
};

std::vector<Candidate> candidates(const Poly1& res, const Rational& radius) {
  std::vector<Candidate> out;
  Poly1 sqf = exact_div(monic(res), gcd(res, derivative(res)));
  if (sqf.coeff(0) == 0) {
    out.push_back({Poly1::x(), {0, 0}});
    sqf = exact_div(sqf, Poly1::x());
  }
  // sqf is square-free without a root at zero, so real_roots isolates its
  // roots with respect to sqf itself and refine_root can reuse it.
  for (const auto& r : real_roots(sqf)) {
    if (r.where.hi < -radius || r.where.lo > radius) continue;
    out.push_back({sqf, r.where});
  }
  return out;
}

}  // namespace

FiniteEquilibriaScan finite_equilibria(const VectorField& vf, const Rational& radius) {
  FiniteEquilibriaScan scan;
  const Poly2& p = vf.p();
  const Poly2& q = vf.q();
  if (p.is_zero() || q.is_zero()) {
    scan.isolated = false;
    return scan;
  }
  Poly1 rx = resultant_y(p, q);
  Poly2 ps = substitute(p, Poly2::y(), Poly2::x()), qs = substitute(q, Poly2::y(), Poly2::x());
  Poly1 ry = resultant_y(ps, qs);
  if (rx.is_zero() || ry.is_zero()) {
    scan.isolated = false;
    return scan;
  }
  if (rx.degree() < 1 || ry.degree() < 1) return scan;  // no common zeros at all

  const Rational min_width = Rational(1) / (mpz_class(1) << 120);
  for (const auto& cx : candidates(rx, radius)) {
    for (const auto& cy : candidates(ry, radius)) {
      Interval ix = cx.where, iy = cy.where;
      bool excluded = false;
      while (true) {
        if (ix.lo == ix.hi && iy.lo == iy.hi) {
          excluded = p.eval(ix.lo, iy.lo) != 0 || q.eval(ix.lo, iy.lo) != 0;
          break;
        }
        if (!eval_interval(p, ix, iy).contains_zero() || !eval_interval(q, ix, iy).contains_zero()) {
          excluded = true;
          break;
        }
        if (ix.width() <= min_width && iy.width() <= min_width) break;
        ix = refine_root(cx.squarefree, ix, ix.width() / 4);
        iy = refine_root(cy.squarefree, iy, iy.width() / 4);
      }
      if (!excluded) scan.points.push_back({ix, iy});
    }
  }
  return scan;
}

}  // namespace gcenter
