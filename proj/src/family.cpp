#include <gcenter/errors.hpp>
#include <gcenter/family.hpp>

namespace gcenter {

Rational& FamilyParams::operator[](std::size_t k) {
  Rational* f[8] = {&a1, &a2, &b1, &b2, &c1, &c2, &d1, &d2};
  return *f[k];
}

const Rational& FamilyParams::operator[](std::size_t k) const {
  const Rational* f[8] = {&a1, &a2, &b1, &b2, &c1, &c2, &d1, &d2};
  return *f[k];
}

bool FamilyParams::is_zero() const {
  for (std::size_t k = 0; k < 8; ++k)
    if ((*this)[k] != 0) return false;
  return true;
}

FamilyParams from_complex(const ComplexCoeff& a3, const ComplexCoeff& a4, const ComplexCoeff& a5,
                          const ComplexCoeff& a6) {
  return {a3.first, a3.second, a4.first, a4.second, a5.first, a5.second, a6.first, a6.second};
}

VectorField build_system(const FamilyParams& k) {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  const Poly2 x2 = x * x, y2 = y * y, xy = x * y;
  Poly2 p = y + 2 * k.a1 * xy - k.a2 * (x2 - y2) - (k.b2 + k.c2 + k.d2) * (x2 * x) -
            (3 * k.b1 + k.c1 - k.d1) * (x2 * y) + (3 * k.b2 - k.c2 - k.d2) * (x * y2);
  Poly2 q = -x + k.a1 * (x2 - y2) + 2 * k.a2 * xy + (k.b1 + k.c1 + k.d1) * (x2 * x) -
            (3 * k.b2 + k.c2 - k.d2) * (x2 * y) + (-3 * k.b1 + k.c1 + k.d1) * (x * y2) +
            (k.b2 - k.c2 + k.d2) * (y2 * y);
  return VectorField(p, q);
}

Rational center_f(const FamilyParams& k) {
  const Rational &a1 = k.a1, &a2 = k.a2, &d1 = k.d1, &d2 = k.d2;
  return a2 * a2 * d2 * d2 * d2 - 3 * a2 * a2 * d2 * d1 * d1 + 6 * a2 * a1 * d2 * d2 * d1 -
         2 * a2 * a1 * d1 * d1 * d1 - a1 * a1 * d2 * d2 * d2 + 3 * a1 * a1 * d2 * d1 * d1;
}

Rational center_g(const FamilyParams& k) {
  const Rational &a1 = k.a1, &a2 = k.a2, &b1 = k.b1, &b2 = k.b2;
  return -a2 * a2 * b2 * b2 * b2 + 3 * a2 * a2 * b2 * b1 * b1 + 6 * a2 * a1 * b2 * b2 * b1 -
         2 * a2 * a1 * b1 * b1 * b1 + a1 * a1 * b2 * b2 * b2 - 3 * a1 * a1 * b2 * b1 * b1;
}

std::string to_string(CenterCase c) {
  switch (c) {
    case CenterCase::I: return "i";
    case CenterCase::II: return "ii";
    case CenterCase::III: return "iii";
    case CenterCase::IV: return "iv";
  }
  return "?";
}

CenterReport center_cases(const FamilyParams& k) {
  CenterReport r;
  r.f_value = center_f(k);
  r.g_value = center_g(k);
  const bool base = k.c2 == 0 && k.b2 * k.d1 + k.d2 * k.b1 == 0;
  if (base && 3 * k.b1 - k.d1 == 0) r.matching_cases.insert(CenterCase::I);
  if (base && r.f_value == 0) r.matching_cases.insert(CenterCase::II);
  if (k.c1 == 0 && k.c2 == 0 && k.b2 - k.d2 == 0 && k.b1 + k.d1 == 0)
    r.matching_cases.insert(CenterCase::III);
  // The printed statement of (iv) omits "= 0" after G; the proof uses G = 0.
  if (k.c2 == 0 && k.d1 == 0 && k.d2 == 0 && r.g_value == 0)
    r.matching_cases.insert(CenterCase::IV);
  return r;
}

GlobalReport global_cases(const FamilyParams& k) {
  GlobalReport r;
  auto zero = [](std::initializer_list<const Rational*> xs) {
    for (const auto* x : xs)
      if (*x != 0) return false;
    return true;
  };
  if (zero({&k.a1, &k.a2, &k.b2, &k.c2, &k.d2}) && k.d1 == 3 * k.b1 && k.b1 == -k.c1 / 4 &&
      k.c1 < 0)
    r.matching_statements.insert('a');
  if (zero({&k.a1, &k.a2, &k.b2, &k.c1, &k.c2, &k.d2}) && k.d1 == 3 * k.b1 && k.b1 < 0)
    r.matching_statements.insert('b');
  if (zero({&k.a2, &k.b1, &k.b2, &k.c2, &k.d1, &k.d2}) && k.a1 * k.a1 + k.c1 < 0)
    r.matching_statements.insert('c');
  if (k.is_zero()) r.matching_statements.insert('d');
  if (zero({&k.a1, &k.a2, &k.b2, &k.c2, &k.d2}) && k.d1 == -k.b1 - k.c1 && k.d1 != 3 * k.b1 &&
      2 * k.b1 + k.c1 <= 0 && k.b1 > 0)
    r.matching_statements.insert('e');
  if (zero({&k.a2, &k.b2, &k.c1, &k.c2, &k.d2}) && k.b1 != 0 &&
      k.a1 * k.a1 + 3 * k.b1 - k.d1 < 0 && k.a1 * k.a1 + 4 * (k.b1 + k.d1) < 0)
    r.matching_statements.insert('f');
  if (zero({&k.a1, &k.a2, &k.b1, &k.b2, &k.c2, &k.d2}) && k.d1 == -k.c1 && k.d1 > 0)
    r.matching_statements.insert('g');
  return r;
}

std::string to_string(NormalForm n) {
  switch (n) {
    case NormalForm::AA1: return "aa1";
    case NormalForm::AA2: return "aa2";
    case NormalForm::AA3: return "aa3";
    case NormalForm::AA4: return "aa4";
    case NormalForm::BB5: return "bb5";
    case NormalForm::BB7: return "bb7";
  }
  return "?";
}

NormalForm parse_normal_form(const std::string& s) {
  for (NormalForm n : {NormalForm::AA1, NormalForm::AA2, NormalForm::AA3, NormalForm::AA4,
                       NormalForm::BB5, NormalForm::BB7})
    if (to_string(n) == s) return n;
  throw ParseError("unknown normal form '" + s + "'");
}

bool normal_form_applies(NormalForm tag, const FamilyParams& k) {
  auto zero = [](std::initializer_list<const Rational*> xs) {
    for (const auto* x : xs)
      if (*x != 0) return false;
    return true;
  };
  switch (tag) {
    case NormalForm::AA1:
      return zero({&k.a1, &k.a2, &k.b2, &k.c2, &k.d2}) && k.d1 == 3 * k.b1 && k.b1 == -k.c1 / 4;
    case NormalForm::AA2:
      return zero({&k.a1, &k.a2, &k.b2, &k.c1, &k.c2, &k.d2}) && k.d1 == 3 * k.b1;
    case NormalForm::AA3:
      return zero({&k.a2, &k.b1, &k.b2, &k.c2, &k.d1, &k.d2});
    case NormalForm::AA4:
      return zero({&k.a1, &k.a2, &k.b2, &k.c2, &k.d2}) && k.d1 == -k.b1 - k.c1;
    case NormalForm::BB5:
      return zero({&k.a2, &k.b2, &k.c1, &k.c2, &k.d2});
    case NormalForm::BB7:
      return zero({&k.a1, &k.a2, &k.b1, &k.b2, &k.c2, &k.d2}) && k.d1 == -k.c1;
  }
  return false;
}

VectorField normal_form(NormalForm tag, const FamilyParams& k) {
  if (!normal_form_applies(tag, k))
    throw HypothesesViolated("parameters violate the hypotheses of " + to_string(tag));
  const Poly2 x = Poly2::x(), y = Poly2::y();
  const Poly2 x2y = x * x * y, xy2 = x * y * y, x3 = x * x * x;
  Poly2 p, q;
  switch (tag) {
    case NormalForm::AA1:
      p = y - k.c1 * x2y;
      q = -x + k.c1 * xy2;
      break;
    case NormalForm::AA2:
      p = y;
      q = -x + 4 * k.b1 * x3;
      break;
    case NormalForm::AA3:
      p = y + 2 * k.a1 * x * y - k.c1 * x2y;
      q = -x + k.a1 * (x * x - y * y) + k.c1 * x3 + k.c1 * xy2;
      break;
    case NormalForm::AA4:
      p = y - (4 * k.b1 + 2 * k.c1) * x2y;
      q = -x - 4 * k.b1 * xy2;
      break;
    case NormalForm::BB5:
      p = y + 2 * k.a1 * x * y - (3 * k.b1 - k.d1) * x2y;
      q = -x + k.a1 * (x * x - y * y) + (k.b1 + k.d1) * x3 + (k.d1 - 3 * k.b1) * xy2;
      break;
    case NormalForm::BB7:
      p = y - 2 * k.c1 * x2y;
      q = -x;
      break;
  }
  VectorField reduced(p, q);
  if (reduced != build_system(k))
    throw Error("reduced system " + to_string(tag) + " disagrees with the full family");
  return reduced;
}

}  // namespace gcenter
