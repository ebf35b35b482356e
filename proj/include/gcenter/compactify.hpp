#ifndef GCENTER_COMPACTIFY_HPP
#define GCENTER_COMPACTIFY_HPP

#include <gcenter/univariate.hpp>
#include <gcenter/vector_field.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gcenter {

enum class ChartId { U1, U2, U3, V1, V2 };

std::string to_string(ChartId c);
// Accepts "U1", "u1", ... Throws ParseError.
ChartId parse_chart(const std::string& text);

// A field written in local chart coordinates (u, v); v = 0 is infinity for
// every chart except U3.
struct ChartField {
  ChartId chart;
  VectorField field;
  int n_used;
};

// Poincaré compactification in one local chart. `n` defaults to the effective
// degree of vf; pass it explicitly to reproduce a fixed formal degree.
ChartField chart_field(const VectorField& vf, ChartId chart, std::optional<int> n = std::nullopt);

struct InfiniteEquilibrium {
  ChartId chart;
  RealRoot u;
  int multiplicity;
};

struct InfinityReport {
  std::vector<InfiniteEquilibrium> equilibria;
  bool line_of_equilibria = false;
  int n_used = 0;
};

// Equilibria on v = 0 in U1 (roots of u' at v = 0) plus the origin of U2 when
// it is one. If v divides u' in both U1 and U2 the whole circle at infinity
// consists of equilibria; then the list stays empty and the flag is set.
InfinityReport infinite_equilibria(const VectorField& vf, std::optional<int> n = std::nullopt);

Matrix2 jacobian_at(const VectorField& vf, const Rational& x, const Rational& y);

// Divides both components by v (time rescaling that removes a line of
// equilibria at infinity). Throws NotDivisible.
ChartField rescale_infinity_line(const ChartField& cf);

}  // namespace gcenter

#endif
