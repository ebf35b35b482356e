#include <gcenter/errors.hpp>
#include <gcenter/serialize.hpp>

namespace gcenter {

FamilyParams params_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("params must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* name : FamilyParams::kNames) known = known || key == name;
    if (!known) throw ParseError("unknown parameter '" + key + "'");
  }
  FamilyParams p;
  for (std::size_t k = 0; k < FamilyParams::kNames.size(); ++k) {
    const char* name = FamilyParams::kNames[k];
    if (!j.contains(name)) throw ParseError(std::string("missing parameter '") + name + "'");
    const Json& v = j.at(name);
    if (v.is_string()) {
      p[k] = parse_rational(v.get<std::string>());
    } else if (v.is_number_integer()) {
      p[k] = Rational(v.dump());
    } else {
      throw ParseError(std::string("parameter '") + name + "' must be a rational string or integer");
    }
  }
  return p;
}

FamilyParams parse_params(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return params_from_json(j);
}

Json to_json(const FamilyParams& p) {
  Json j = Json::object();
  for (std::size_t k = 0; k < FamilyParams::kNames.size(); ++k)
    j[FamilyParams::kNames[k]] = to_string(p[k]);
  return j;
}

Json to_json(const VectorField& vf, const VarNames& names) {
  return Json{{"p", to_string(vf.p(), names)}, {"q", to_string(vf.q(), names)}};
}

Json to_json(const RealRoot& r) {
  Json j = Json::object();
  if (r.exact) {
    j["exact"] = r.exact->to_string();
  } else if (r.is_point()) {
    j["exact"] = to_string(r.where.lo);
  } else {
    j["interval"] = Json::array({to_string(r.where.lo), to_string(r.where.hi)});
  }
  j["approx"] = r.approx();
  return j;
}

Json to_json(const InfinityReport& r) {
  Json eqs = Json::array();
  for (const auto& e : r.equilibria) {
    eqs.push_back(Json{{"chart", to_string(e.chart)}, {"u", to_json(e.u)},
                       {"multiplicity", e.multiplicity}});
  }
  return Json{{"n_used", r.n_used}, {"line_of_equilibria", r.line_of_equilibria},
              {"equilibria", eqs}};
}

Json to_json(const BlowupChain& chain) {
  Json stages = Json::array();
  Json first = to_json(chain.start());
  first["stage"] = 0;
  first["step"] = "start";
  stages.push_back(first);
  int k = 1;
  for (const auto& s : chain.steps()) {
    Json st = to_json(s.output);
    st["stage"] = k++;
    st["step"] = describe(s.spec);
    stages.push_back(st);
  }
  return stages;
}

Json to_json(const EquilibriumClass& c, const Matrix2& jacobian) {
  Spectrum s = spectrum(jacobian);
  Json jac = Json::array();
  for (int r = 0; r < 2; ++r)
    jac.push_back(Json::array({to_string(jacobian(r, 0)), to_string(jacobian(r, 1))}));
  return Json{{"class", to_string(c.tag)},
              {"stability", c.stability == Stability::Stable     ? "stable"
                            : c.stability == Stability::Unstable ? "unstable"
                                                                 : "none"},
              {"jacobian", jac},
              {"eigenvalues", Json::array({s.lambda1_text(), s.lambda2_text()})}};
}

Json to_json(const CenterReport& c) {
  Json cases = Json::array();
  for (CenterCase k : c.matching_cases) cases.push_back(to_string(k));
  return Json{{"is_center", c.is_center()},
              {"cases", cases},
              {"F", to_string(c.f_value)},
              {"G", to_string(c.g_value)}};
}

Json to_json(const GlobalReport& g) {
  Json st = Json::array();
  for (char s : g.matching_statements) st.push_back(std::string(1, s));
  return Json{{"is_global", g.is_global()}, {"statements", st}};
}

Json to_json(const IntegratorConfig& cfg) {
  return Json{{"rel_tol", cfg.rel_tol},
              {"abs_tol", cfg.abs_tol},
              {"max_time", cfg.max_time},
              {"escape_radius", cfg.escape_radius},
              {"section_closure_tol", cfg.section_closure_tol},
              {"max_step", cfg.max_step},
              {"max_steps", cfg.max_steps},
              {"refinements", cfg.refinements}};
}

Json to_json(const OrbitVerdict& v) {
  Json j{{"verdict", to_string(v.tag)}, {"time", v.time}};
  if (v.tag != OrbitVerdict::Tag::Escaping) j["closure_error"] = v.closure_error;
  j["peak_log_radius"] = v.peak_log_radius;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Json to_json(const GlobalVerdict& v) {
  Json j{{"verdict", to_string(v.tag)}};
  if (v.witness) {
    j["witness"] = Json{{"kind", v.witness_kind}, {"x", v.witness->x}, {"y", v.witness->y}};
  } else {
    j["witness"] = nullptr;
  }
  j["center_hypothesis"] = v.center_hypothesis;
  j["line_at_infinity"] = v.line_at_infinity;
  j["equilibria_isolated"] = v.equilibria_isolated;
  Json extra = Json::array();
  for (const auto& e : v.extra_equilibria) {
    extra.push_back(Json{{"x", Json::array({to_string(e.x.lo), to_string(e.x.hi)})},
                         {"y", Json::array({to_string(e.y.lo), to_string(e.y.hi)})},
                         {"approx", Json::array({e.approx_x(), e.approx_y()})}});
  }
  j["extra_equilibria"] = extra;
  Json samples = Json::array();
  for (const auto& s : v.samples) {
    Json sj{{"x0", Json::array({s.x0.x, s.x0.y})}};
    sj.update(to_json(s.verdict));
    samples.push_back(sj);
  }
  j["samples"] = samples;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gcenter
