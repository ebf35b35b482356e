#include <gcenter/compactify.hpp>
#include <gcenter/errors.hpp>

#include <cctype>

namespace gcenter {

std::string to_string(ChartId c) {
  switch (c) {
    case ChartId::U1: return "U1";
    case ChartId::U2: return "U2";
    case ChartId::U3: return "U3";
    case ChartId::V1: return "V1";
    case ChartId::V2: return "V2";
  }
  return "?";
}

ChartId parse_chart(const std::string& text) {
  std::string t = text;
  for (auto& ch : t) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (ChartId c : {ChartId::U1, ChartId::U2, ChartId::U3, ChartId::V1, ChartId::V2})
    if (to_string(c) == t) return c;
  throw ParseError("unknown chart '" + text + "'");
}

ChartField chart_field(const VectorField& vf, ChartId chart, std::optional<int> n) {
  int deg = n.value_or(vf.effective_degree());
  const Poly2 u = Poly2::x(), v = Poly2::y();
  switch (chart) {
    case ChartId::U3:
      return {chart, vf, deg};
    case ChartId::U1:
    case ChartId::V1: {
      Poly2 pd = dilate_chart_numerator(vf.p(), deg);
      Poly2 qd = dilate_chart_numerator(vf.q(), deg);
      Poly2 du = qd - u * pd, dv = -(v * pd);
      if (chart == ChartId::V1 && deg % 2 == 0) {
        du = -du;
        dv = -dv;
      }
      return {chart, VectorField(du, dv), deg};
    }
    case ChartId::U2:
    case ChartId::V2: {
      Poly2 pd = dilate_chart_numerator_swapped(vf.p(), deg);
      Poly2 qd = dilate_chart_numerator_swapped(vf.q(), deg);
      Poly2 du = pd - u * qd, dv = -(v * qd);
      if (chart == ChartId::V2 && deg % 2 == 0) {
        du = -du;
        dv = -dv;
      }
      return {chart, VectorField(du, dv), deg};
    }
  }
  throw Error("unreachable chart");
}

InfinityReport infinite_equilibria(const VectorField& vf, std::optional<int> n) {
  ChartField u1 = chart_field(vf, ChartId::U1, n);
  ChartField u2 = chart_field(vf, ChartId::U2, n);
  InfinityReport report;
  report.n_used = u1.n_used;
  auto v_divides = [](const Poly2& p) { return p.is_zero() || monomial_valuation(p, Var::Y) >= 1; };
  report.line_of_equilibria = v_divides(u1.field.p()) && v_divides(u1.field.q()) &&
                              v_divides(u2.field.p()) && v_divides(u2.field.q());
  if (report.line_of_equilibria) return report;

  Poly1 at_infinity = restrict_to(u1.field.p(), Var::Y, 0);
  for (auto& root : real_roots(at_infinity)) {
    int mult = root.multiplicity;
    report.equilibria.push_back({ChartId::U1, std::move(root), mult});
  }
  Poly1 u2_line = restrict_to(u2.field.p(), Var::Y, 0);
  if (u2_line.coeff(0) == 0) {
    int mult = 0;
    while (u2_line.coeff(mult) == 0 && mult <= u2_line.degree()) ++mult;
    RealRoot origin{{0, 0}, QuadraticSurd{0, 0, 1}, mult};
    report.equilibria.push_back({ChartId::U2, origin, mult});
  }
  return report;
}

Matrix2 jacobian_at(const VectorField& vf, const Rational& x, const Rational& y) {
  Matrix2 j;
  j(0, 0) = partial(vf.p(), Var::X).eval(x, y);
  j(0, 1) = partial(vf.p(), Var::Y).eval(x, y);
  j(1, 0) = partial(vf.q(), Var::X).eval(x, y);
  j(1, 1) = partial(vf.q(), Var::Y).eval(x, y);
  return j;
}

ChartField rescale_infinity_line(const ChartField& cf) {
  return {cf.chart,
          VectorField(divide_monomial(cf.field.p(), Var::Y, 1),
                      divide_monomial(cf.field.q(), Var::Y, 1)),
          cf.n_used};
}

}  // namespace gcenter
