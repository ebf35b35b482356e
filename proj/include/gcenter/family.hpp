#ifndef GCENTER_FAMILY_HPP
#define GCENTER_FAMILY_HPP

#include <gcenter/vector_field.hpp>

#include <array>
#include <set>
#include <string>
#include <utility>

namespace gcenter {

// Real and imaginary parts of A3 = a1 + i a2, A4 = b1 + i b2,
// A5 = c1 + i c2, A6 = d1 + i d2.
struct FamilyParams {
  Rational a1, a2, b1, b2, c1, c2, d1, d2;

  static constexpr std::array<const char*, 8> kNames{"a1", "a2", "b1", "b2",
                                                      "c1", "c2", "d1", "d2"};
  Rational& operator[](std::size_t k);
  const Rational& operator[](std::size_t k) const;
  bool is_zero() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

using ComplexCoeff = std::pair<Rational, Rational>;
FamilyParams from_complex(const ComplexCoeff& a3, const ComplexCoeff& a4, const ComplexCoeff& a5,
                          const ComplexCoeff& a6);

// The cubic system with linear part (y, -x), quadratic part from A3 and cubic
// part from A4, A5, A6.
VectorField build_system(const FamilyParams& p);

Rational center_f(const FamilyParams& p);
Rational center_g(const FamilyParams& p);

enum class CenterCase { I, II, III, IV };
std::string to_string(CenterCase c);

struct CenterReport {
  std::set<CenterCase> matching_cases;
  Rational f_value;
  Rational g_value;

  bool is_center() const { return !matching_cases.empty(); }
};

// Every one of the four center condition sets that holds (they overlap).
CenterReport center_cases(const FamilyParams& p);

// Global-center statements a..g, identified by their letter.
struct GlobalReport {
  std::set<char> matching_statements;

  bool is_global() const { return !matching_statements.empty(); }
};

GlobalReport global_cases(const FamilyParams& p);

enum class NormalForm { AA1, AA2, AA3, AA4, BB5, BB7 };
std::string to_string(NormalForm n);
NormalForm parse_normal_form(const std::string& s);

// Whether p satisfies the reduction hypotheses under which the tag's reduced
// system equals build_system(p).
bool normal_form_applies(NormalForm tag, const FamilyParams& p);

// The reduced system for the tag. Throws HypothesesViolated when the
// hypotheses fail, and Error if the reduced system disagrees with
// build_system(p).
VectorField normal_form(NormalForm tag, const FamilyParams& p);

}  // namespace gcenter

#endif
