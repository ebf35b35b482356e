// Helpers shared by the unit, property and acceptance tests.
#ifndef GCENTER_TESTS_SUPPORT_HPP
#define GCENTER_TESTS_SUPPORT_HPP

#include <gcenter/errors.hpp>
#include <gcenter/family.hpp>
#include <gcenter/poly.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gcenter::testing {

// Parameters given by name; everything unnamed is zero.
inline FamilyParams params(std::initializer_list<std::pair<const char*, Rational>> named) {
  FamilyParams p;
  for (const auto& [name, value] : named) {
    bool found = false;
    for (std::size_t k = 0; k < FamilyParams::kNames.size(); ++k) {
      if (std::string(FamilyParams::kNames[k]) == name) {
        p[k] = value;
        found = true;
      }
    }
    if (!found) throw Error(std::string("unknown parameter ") + name);
  }
  return p;
}

inline std::map<std::string, Rational> bindings(const FamilyParams& p) {
  std::map<std::string, Rational> b;
  for (std::size_t k = 0; k < FamilyParams::kNames.size(); ++k) b[FamilyParams::kNames[k]] = p[k];
  return b;
}

// A hand-typed expression in u, v and the family parameters, specialised to p.
inline Poly2 expr(const std::string& text, const FamilyParams& p, const VarNames& names = kUV) {
  return parse_poly(text, names, bindings(p));
}

inline Rational q(long n, long d = 1) {
  Rational r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return r;
}

}  // namespace gcenter::testing

#endif
