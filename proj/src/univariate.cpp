#include <gcenter/errors.hpp>
#include <gcenter/univariate.hpp>

#include <algorithm>
#include <cmath>

namespace gcenter {

Poly1::Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1::Poly1(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly1::Poly1(int c) : Poly1(Rational(c)) {}

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly1::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly1::eval(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly1(std::move(r));
}

DivMod divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly1(), a};
  std::vector<Rational> quo(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[k] / b.leading();
    quo[k - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 exact_div(const Poly1& a, const Poly1& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible("inexact univariate division");
  return q;
}

Poly1 derivative(const Poly1& a) {
  if (a.degree() < 1) return {};
  std::vector<Rational> d(a.degree());
  for (int k = 1; k <= a.degree(); ++k) d[k - 1] = a.coeffs()[k] * k;
  return Poly1(std::move(d));
}

Poly1 monic(const Poly1& a) {
  if (a.is_zero()) return a;
  std::vector<Rational> c = a.coeffs();
  Rational lc = a.leading();
  for (auto& x : c) x /= lc;
  return Poly1(std::move(c));
}

Poly1 gcd(const Poly1& a, const Poly1& b) {
  Poly1 x = a, y = b;
  while (!y.is_zero()) {
    Poly1 r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::vector<Poly1> squarefree_decomposition(const Poly1& a) {
  std::vector<Poly1> out;
  if (a.degree() < 1) return out;
  Poly1 f = monic(a);
  Poly1 fp = derivative(f);
  Poly1 g = gcd(f, fp);
  Poly1 b = exact_div(f, g);
  Poly1 c = exact_div(fp, g);
  Poly1 d = c - derivative(b);
  while (b.degree() >= 1) {
    Poly1 h = gcd(b, d);
    out.push_back(h);
    b = exact_div(b, h);
    c = exact_div(d, h);
    d = c - derivative(b);
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

Poly1 restrict_to(const Poly2& a, Var fixed, const Rational& value) {
  std::vector<Rational> c(std::max(0, a.degree() + 1));
  for (const auto& [m, coef] : a.terms()) {
    int fe = fixed == Var::X ? m.i : m.j;
    int fr = fixed == Var::X ? m.j : m.i;
    Rational p = 1;
    for (int k = 0; k < fe; ++k) p *= value;
    c[fr] += coef * p;
  }
  return Poly1(std::move(c));
}

std::string to_string(const Poly1& p, const std::string& var) {
  Poly2 q;
  for (int k = 0; k <= p.degree(); ++k) q += Poly2::monomial(p.coeff(k), k, 0);
  return to_string(q, VarNames{var, "_"});
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n = sqrt(r.get_num()), d = sqrt(r.get_den());
  Rational s(n, d);
  s.canonicalize();
  return s;
}

QuadraticSurd QuadraticSurd::make(const Rational& a, const Rational& b, const Rational& d) {
  if (d < 0) throw Error("negative radicand");
  if (b == 0 || d == 0) return {a, 0, 1};
  if (auto s = rational_sqrt(d)) return {a + b * *s, 0, 1};
  return {a, b, d};
}

int QuadraticSurd::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  int cmp_ = cmp(a * a, b * b * d);
  return cmp_ > 0 ? sa : (cmp_ < 0 ? sb : 0);
}

double QuadraticSurd::to_double() const { return a.get_d() + b.get_d() * std::sqrt(d.get_d()); }

std::string QuadraticSurd::to_string() const {
  if (b == 0) return gcenter::to_string(a);
  Rational mag = abs(b);
  std::string root = "sqrt(" + gcenter::to_string(d) + ")";
  std::string bterm = mag == 1 ? root : gcenter::to_string(mag) + "*" + root;
  if (a == 0) return (b < 0 ? "-" : "") + bterm;
  return gcenter::to_string(a) + (b < 0 ? " - " : " + ") + bterm;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval interval_pow(const Interval& a, int k) {
  if (k == 0) return {1, 1};
  Interval r = a;
  for (int n = 1; n < k; ++n) r = r * a;
  if (k % 2 == 0 && a.contains_zero()) {
    r.lo = 0;
  }
  return r;
}

Interval eval_interval(const Poly2& p, const Interval& ix, const Interval& iy) {
  Interval acc{0, 0};
  for (const auto& [m, c] : p.terms()) {
    Interval t = interval_pow(ix, m.i) * interval_pow(iy, m.j);
    acc = acc + Interval{c, c} * t;
  }
  return acc;
}

double RealRoot::approx() const {
  if (exact) return exact->to_double();
  return where.mid().get_d();
}

namespace {

int variations(const std::vector<Poly1>& chain, const Rational& t) {
  int count = 0, last = 0;
  for (const auto& s : chain) {
    int sg = s.sign_at(t);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

std::vector<Poly1> sturm_chain(const Poly1& p) {
  std::vector<Poly1> chain{p, derivative(p)};
  while (!chain.back().is_zero()) {
    Poly1 r = -divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

struct Isolator {
  const Poly1& p;
  std::vector<Poly1> chain;

  int count(const Rational& lo, const Rational& hi) const {
    return variations(chain, lo) - variations(chain, hi);
  }

  void isolate(const Rational& lo, const Rational& hi, std::vector<Interval>& out) const {
    int n = count(lo, hi);
    if (n == 0) return;
    if (n == 1) {
      if (p.sign_at(hi) == 0)
        out.push_back({hi, hi});
      else
        out.push_back({lo, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    isolate(lo, mid, out);
    isolate(mid, hi, out);
  }

  Interval refine(Interval w, const Rational& width) const {
    while (w.lo != w.hi && w.width() > width) {
      Rational mid = w.mid();
      if (p.sign_at(mid) == 0) return {mid, mid};
      if (count(w.lo, mid) == 1)
        w.hi = mid;
      else
        w.lo = mid;
    }
    return w;
  }
};

}  // namespace

Rational root_bound(const Poly1& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeffs()[k] / p.leading())));
  return m + 1;
}

int count_roots(const Poly1& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) return 0;
  Poly1 sqf = exact_div(monic(p), gcd(p, derivative(p)));
  Isolator iso{sqf, sturm_chain(sqf)};
  return iso.count(lo, hi);
}

Interval refine_root(const Poly1& squarefree, Interval where, const Rational& width) {
  Isolator iso{squarefree, sturm_chain(squarefree)};
  return iso.refine(where, width);
}

std::vector<RealRoot> real_roots(const Poly1& p, const Rational& width) {
  std::vector<RealRoot> roots;
  if (p.is_zero()) return roots;
  // Roots at zero are split off so they always come out exact.
  int zeros = 0;
  while (p.coeff(zeros) == 0) ++zeros;
  if (zeros > 0) roots.push_back({{0, 0}, QuadraticSurd{0, 0, 1}, zeros});
  std::vector<Rational> rest(p.coeffs().begin() + zeros, p.coeffs().end());
  auto factors = squarefree_decomposition(Poly1(std::move(rest)));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Poly1& f = factors[k];
    int mult = static_cast<int>(k) + 1;
    if (f.degree() < 1) continue;
    if (f.degree() == 1) {
      Rational r = -f.coeff(0) / f.coeff(1);
      roots.push_back({{r, r}, QuadraticSurd{r, 0, 1}, mult});
      continue;
    }
    Isolator iso{f, sturm_chain(f)};
    Rational b = root_bound(f);
    std::vector<Interval> found;
    iso.isolate(-b - 1, b, found);
    std::vector<QuadraticSurd> closed;
    if (f.degree() == 2) {
      // monic u^2 + p u + q
      Rational half = -f.coeff(1) / 2;
      Rational disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
      if (disc > 0)
        closed = {QuadraticSurd::make(half, Rational(-1, 2), disc),
                  QuadraticSurd::make(half, Rational(1, 2), disc)};
    }
    for (std::size_t r = 0; r < found.size(); ++r) {
      RealRoot root{iso.refine(found[r], width), std::nullopt, mult};
      if (closed.size() == found.size()) root.exact = closed[r];
      roots.push_back(std::move(root));
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.approx() < b.approx(); });
  return roots;
}

Poly1 resultant_y(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto coeffs_in_y = [](const Poly2& p) {
    std::vector<Poly1> c(p.degree_in(Var::Y) + 1);
    for (const auto& [m, coef] : p.terms()) {
      std::vector<Rational> mono(m.i + 1);
      mono[m.i] = coef;
      c[m.j] += Poly1(std::move(mono));
    }
    return c;
  };
  auto ca = coeffs_in_y(a), cb = coeffs_in_y(b);
  int m = static_cast<int>(ca.size()) - 1, n = static_cast<int>(cb.size()) - 1;
  auto power = [](const Poly1& p, int k) {
    Poly1 r = 1;
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
  };
  if (m == 0) return power(ca[0], n);
  if (n == 0) return power(cb[0], m);
  int size = m + n;
  std::vector<std::vector<Poly1>> s(size, std::vector<Poly1>(size));
  // columns ordered from y^(m+n-1) down to y^0
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + (m - k)] = ca[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + (n - k)] = cb[k];
  // Bareiss elimination; every division below is exact in Q[x].
  Poly1 prev = 1;
  int sgn_ = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k].is_zero()) {
      int swap_with = -1;
      for (int i = k + 1; i < size; ++i)
        if (!s[i][k].is_zero()) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) return {};
      std::swap(s[k], s[swap_with]);
      sgn_ = -sgn_;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        s[i][j] = exact_div(s[i][j] * s[k][k] - s[i][k] * s[k][j], prev);
      s[i][k] = Poly1();
    }
    prev = s[k][k];
  }
  Poly1 det = s[size - 1][size - 1];
  return sgn_ > 0 ? det : -det;
}

}  // namespace gcenter
