#include <gcenter/errors.hpp>
#include <gcenter/poly.hpp>

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace gcenter {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational: '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator: '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rational& r) { return sgn(r); }

double to_double(const Rational& r) { return r.get_d(); }

Rational from_double(double d) {
  Rational r(d);
  r.canonicalize();
  return r;
}

Poly2::Poly2(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, c);
}

Poly2::Poly2(int c) : Poly2(Rational(c)) {}

Poly2 Poly2::monomial(const Rational& c, int i, int j) {
  Poly2 p;
  p.add_term({i, j}, c);
  return p;
}

int Poly2::degree() const {
  // CanonicalOrder puts the highest total degree first.
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Poly2::order() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

Rational Poly2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::X ? m.i : m.j);
  return d;
}

namespace {

Rational rational_pow(const Rational& base, int k) {
  Rational r = 1;
  for (int n = 0; n < k; ++n) r *= base;
  return r;
}

}  // namespace

Rational Poly2::eval(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) acc += c * rational_pow(x, m.i) * rational_pow(y, m.j);
  return acc;
}

double Poly2::eval(double x, double y) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_)
    acc += c.get_d() * std::pow(x, m.i) * std::pow(y, m.j);
  return acc;
}

void Poly2::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
  return r;
}

Poly2& Poly2::operator*=(const Poly2& o) { return *this = *this * o; }

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Poly2 operator-(Poly2 a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Poly2 add(const Poly2& a, const Poly2& b) { return a + b; }
Poly2 mul(const Poly2& a, const Poly2& b) { return a * b; }

Poly2 pow(const Poly2& a, int k) {
  Poly2 r = 1;
  Poly2 base = a;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

Poly2 partial(const Poly2& a, Var var) {
  Poly2 r;
  for (const auto& [m, c] : a.terms()) {
    int e = var == Var::X ? m.i : m.j;
    if (e == 0) continue;
    Monomial d = var == Var::X ? Monomial{m.i - 1, m.j} : Monomial{m.i, m.j - 1};
    r += Poly2::monomial(c * e, d.i, d.j);
  }
  return r;
}

Poly2 substitute(const Poly2& a, const Poly2& sx, const Poly2& sy) {
  if (a.is_zero()) return {};
  std::vector<Poly2> xp{1}, yp{1};
  int dx = a.degree_in(Var::X), dy = a.degree_in(Var::Y);
  for (int k = 1; k <= dx; ++k) xp.push_back(xp.back() * sx);
  for (int k = 1; k <= dy; ++k) yp.push_back(yp.back() * sy);
  Poly2 r;
  for (const auto& [m, c] : a.terms()) r += c * (xp[m.i] * yp[m.j]);
  return r;
}

Poly2 homogeneous_part(const Poly2& a, int k) {
  Poly2 r;
  for (const auto& [m, c] : a.terms())
    if (m.degree() == k) r += Poly2::monomial(c, m.i, m.j);
  return r;
}

int monomial_valuation(const Poly2& a, Var var) {
  if (a.is_zero()) return 0;
  int v = -1;
  for (const auto& [m, c] : a.terms()) {
    int e = var == Var::X ? m.i : m.j;
    v = v < 0 ? e : std::min(v, e);
  }
  return v;
}

Poly2 divide_monomial(const Poly2& a, Var var, int k) {
  Poly2 r;
  for (const auto& [m, c] : a.terms()) {
    int e = var == Var::X ? m.i : m.j;
    if (e < k) {
      std::ostringstream msg;
      msg << "term of degree " << e << " in " << (var == Var::X ? "first" : "second")
          << " variable is not divisible by power " << k;
      throw NotDivisible(msg.str());
    }
    r += var == Var::X ? Poly2::monomial(c, m.i - k, m.j) : Poly2::monomial(c, m.i, m.j - k);
  }
  return r;
}

Poly2 dilate_chart_numerator(const Poly2& a, int n) {
  if (n < a.degree())
    throw DegreeTooLow("chart degree " + std::to_string(n) + " below polynomial degree " +
                       std::to_string(a.degree()));
  // x^i y^j -> v^(n-i-j) u^j
  Poly2 r;
  for (const auto& [m, c] : a.terms()) r += Poly2::monomial(c, m.j, n - m.degree());
  return r;
}

Poly2 dilate_chart_numerator_swapped(const Poly2& a, int n) {
  if (n < a.degree())
    throw DegreeTooLow("chart degree " + std::to_string(n) + " below polynomial degree " +
                       std::to_string(a.degree()));
  // x^i y^j -> u^i v^(n-i-j)
  Poly2 r;
  for (const auto& [m, c] : a.terms()) r += Poly2::monomial(c, m.i, n - m.degree());
  return r;
}

std::string to_string(const Poly2& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto append_var = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append_var(names[0], m.i);
    append_var(names[1], m.j);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarNames& names,
         const std::map<std::string, Rational>& bindings)
      : text_(text), names_(names), bindings_(bindings) {}

  Poly2 parse() {
    Poly2 r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly2 expr() {
    Poly2 r = term();
    while (true) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  Poly2 term() {
    Poly2 r = unary();
    while (true) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        Poly2 d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        r *= Rational(1) / d.coeff(0, 0);
      } else {
        return r;
      }
    }
  }

  Poly2 unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly2 power() {
    Poly2 base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return gcenter::pow(base, std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly2 primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly2 r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly2(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == names_[0]) return Poly2::x();
      if (name == names_[1]) return Poly2::y();
      if (auto it = bindings_.find(name); it != bindings_.end()) return Poly2(it->second);
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const VarNames& names_;
  const std::map<std::string, Rational>& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly(std::string_view text, const VarNames& names,
                 const std::map<std::string, Rational>& bindings) {
  return Parser(text, names, bindings).parse();
}

}  // namespace gcenter
