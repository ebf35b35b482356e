#include <gcenter/desing.hpp>
#include <gcenter/errors.hpp>

#include <sstream>

namespace gcenter {

CharacteristicPoly characteristic_directions(const VectorField& vf) {
  if (!vf.vanishes_at(0, 0)) throw NotEquilibrium("origin is not an equilibrium");
  int order = -1;
  for (int k = 1; k <= vf.effective_degree(); ++k) {
    if (!homogeneous_part(vf.p(), k).is_zero() || !homogeneous_part(vf.q(), k).is_zero()) {
      order = k;
      break;
    }
  }
  CharacteristicPoly cp;
  cp.order = order;
  cp.r = homogeneous_part(vf.p(), order) * Poly2::y() - homogeneous_part(vf.q(), order) * Poly2::x();
  cp.vertical_is_characteristic = cp.r.eval(0, 1) == 0;
  return cp;
}

VectorField linear_change(const VectorField& vf, const Matrix2& m) {
  Rational det = m.det();
  if (det == 0) throw Error("singular coordinate change");
  Poly2 sx = m(0, 0) * Poly2::x() + m(0, 1) * Poly2::y();
  Poly2 sy = m(1, 0) * Poly2::x() + m(1, 1) * Poly2::y();
  Poly2 p = substitute(vf.p(), sx, sy), q = substitute(vf.q(), sx, sy);
  // w' = m^{-1} (p, q)
  Poly2 du = (m(1, 1) / det) * p - (m(0, 1) / det) * q;
  Poly2 dv = (m(0, 0) / det) * q - (m(1, 0) / det) * p;
  return VectorField(du, dv);
}

VectorField twist(const VectorField& vf, const Rational& alpha) {
  if (alpha == 0) throw ZeroAlpha("twist parameter must be nonzero");
  return linear_change(vf, Matrix2{{1, 0, 1, alpha}});
}

VectorField shear(const VectorField& vf, const Rational& beta) {
  if (beta == 0) throw ZeroAlpha("shear parameter must be nonzero");
  return linear_change(vf, Matrix2{{1, beta, 0, 1}});
}

VectorField translate(const VectorField& vf, const Rational& dx, const Rational& dy) {
  Poly2 sx = Poly2::x() + Poly2(dx), sy = Poly2::y() + Poly2(dy);
  return VectorField(substitute(vf.p(), sx, sy), substitute(vf.q(), sx, sy));
}

VectorField vertical_blowup(const VectorField& vf) {
  const Poly2 u1 = Poly2::x(), v1 = Poly2::y();
  Poly2 p = substitute(vf.p(), u1, u1 * v1);
  Poly2 q = substitute(vf.q(), u1, u1 * v1);
  Poly2 numer = q - v1 * p;
  try {
    return VectorField(p, divide_monomial(numer, Var::X, 1));
  } catch (const NotDivisible&) {
    throw NotDivisible("vertical blow-up: v-component is not divisible by u1 (" +
                       to_string(numer, kUV) + ")");
  }
}

VectorField time_rescale(const VectorField& vf, Var var, int k) {
  return VectorField(divide_monomial(vf.p(), var, k), divide_monomial(vf.q(), var, k));
}

Rational choose_shear(const VectorField& vf) {
  for (int b : {1, -1, 2, -2}) {
    if (!characteristic_directions(shear(vf, b)).vertical_is_characteristic) return b;
  }
  throw Error("no shear in {1, -1, 2, -2} removes the vertical characteristic direction");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t[]");
  auto e = s.find_last_not_of(" \t[]");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Var parse_var(const std::string& t) {
  if (t == "u" || t == "x") return Var::X;
  if (t == "v" || t == "y") return Var::Y;
  throw ParseError("unknown variable '" + t + "'");
}

}  // namespace

std::vector<StepSpec> parse_steps(const std::string& text) {
  std::vector<StepSpec> out;
  for (const auto& raw : split(text, ',')) {
    std::string tok = trim(raw);
    if (tok.empty()) throw ParseError("empty step in '" + text + "'");
    auto parts = split(tok, ':');
    for (auto& p : parts) p = trim(p);
    const std::string& name = parts[0];
    auto need = [&](std::size_t n) {
      if (parts.size() != n) throw ParseError("wrong number of arguments in step '" + tok + "'");
    };
    StepSpec s{};
    if (name == "blowup") {
      need(1);
      s.kind = StepKind::VerticalBlowup;
    } else if (name == "rescale") {
      need(3);
      s.kind = StepKind::TimeRescale;
      s.var = parse_var(parts[1]);
      try {
        s.k = std::stoi(parts[2]);
      } catch (const std::exception&) {
        throw ParseError("bad rescale power in '" + tok + "'");
      }
      if (s.k < 1) throw ParseError("rescale power must be positive in '" + tok + "'");
    } else if (name == "twist") {
      need(2);
      s.kind = StepKind::Twist;
      s.a = parse_rational(parts[1]);
    } else if (name == "shear") {
      need(2);
      s.kind = StepKind::Shear;
      s.a = parse_rational(parts[1]);
    } else if (name == "translate") {
      need(3);
      s.kind = StepKind::Translate;
      s.a = parse_rational(parts[1]);
      s.b = parse_rational(parts[2]);
    } else {
      throw ParseError("unknown step '" + name + "'");
    }
    out.push_back(s);
  }
  return out;
}

std::string describe(const StepSpec& s) {
  switch (s.kind) {
    case StepKind::VerticalBlowup: return "blowup";
    case StepKind::TimeRescale:
      return std::string("rescale:") + (s.var == Var::X ? "u" : "v") + ":" + std::to_string(s.k);
    case StepKind::Twist: return "twist:" + to_string(s.a);
    case StepKind::Shear: return "shear:" + to_string(s.a);
    case StepKind::Translate: return "translate:" + to_string(s.a) + ":" + to_string(s.b);
  }
  return "?";
}

VectorField apply_step(const VectorField& vf, const StepSpec& spec) {
  switch (spec.kind) {
    case StepKind::VerticalBlowup: return vertical_blowup(vf);
    case StepKind::TimeRescale: return time_rescale(vf, spec.var, spec.k);
    case StepKind::Twist: return twist(vf, spec.a);
    case StepKind::Shear: return shear(vf, spec.a);
    case StepKind::Translate: return translate(vf, spec.a, spec.b);
  }
  throw Error("unreachable step kind");
}

void BlowupChain::apply(const StepSpec& spec) {
  if (static_cast<int>(steps_.size()) >= kMaxChainDepth)
    throw ChainTooDeep("blow-up chain exceeds depth " + std::to_string(kMaxChainDepth));
  const int stage = static_cast<int>(steps_.size()) + 1;
  auto tag = [&](const std::exception& e) {
    return "stage " + std::to_string(stage) + " (" + describe(spec) + "): " + e.what();
  };
  VectorField in = final_field();
  try {
    VectorField out = apply_step(in, spec);
    steps_.push_back({spec, std::move(in), std::move(out)});
  } catch (const NotDivisible& e) {
    throw NotDivisible(tag(e));
  } catch (const ZeroAlpha& e) {
    throw ZeroAlpha(tag(e));
  } catch (const Error& e) {
    throw Error(tag(e));
  }
}

BlowupChain BlowupChain::run(const VectorField& start, std::span<const StepSpec> specs) {
  BlowupChain chain(start);
  for (const auto& s : specs) chain.apply(s);
  return chain;
}

}  // namespace gcenter
