#include <gcenter/commands.hpp>
#include <gcenter/errors.hpp>
#include <gcenter/serialize.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

namespace gcenter {

namespace {

// Maps library exceptions onto exit codes so every command fails the same way.
template <typename Body>
CommandResult guarded(Body body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {exit_code::kParseError, "", e.what()};
  } catch (const std::exception& e) {
    return {exit_code::kComputeError, "", e.what()};
  }
}

}  // namespace

CommandResult cmd_decide(const std::string& params_json) {
  return guarded([&]() -> CommandResult {
    FamilyParams p = parse_params(params_json);
    CenterReport c = center_cases(p);
    GlobalReport g = global_cases(p);
    Json out{{"params", to_json(p)}, {"center", to_json(c)}, {"global", to_json(g)}};
    int code = g.is_global()   ? exit_code::kGlobal
               : c.is_center() ? exit_code::kCenterNotGlobal
                               : exit_code::kNoCenter;
    return {code, dump(out), ""};
  });
}

CommandResult cmd_compactify(const std::string& params_json, const std::string& chart) {
  return guarded([&]() -> CommandResult {
    FamilyParams p = parse_params(params_json);
    ChartId id = parse_chart(chart);
    VectorField vf = build_system(p);
    ChartField cf = chart_field(vf, id);
    Json out{{"params", to_json(p)},
             {"chart", to_string(id)},
             {"n_used", cf.n_used},
             {"field", to_json(cf.field)},
             {"infinity", to_json(infinite_equilibria(vf))}};
    return {0, dump(out), ""};
  });
}

CommandResult cmd_blowup(const std::string& params_json, const std::string& chart,
                         const std::string& steps) {
  return guarded([&]() -> CommandResult {
    FamilyParams p = parse_params(params_json);
    ChartId id = parse_chart(chart);
    std::vector<StepSpec> specs = parse_steps(steps);
    ChartField cf = chart_field(build_system(p), id);
    BlowupChain chain = BlowupChain::run(cf.field, specs);
    Json out{{"params", to_json(p)},
             {"chart", to_string(id)},
             {"n_used", cf.n_used},
             {"stages", to_json(chain)}};
    return {0, dump(out), ""};
  });
}

CommandResult cmd_verify(const std::string& params_json, const IntegratorConfig& cfg,
                         const std::vector<double>& radii) {
  return guarded([&]() -> CommandResult {
    FamilyParams p = parse_params(params_json);
    cfg.validate();
    GlobalVerdict v = global_center_verdict(p, cfg, radii);
    Json out{{"params", to_json(p)}, {"config", to_json(cfg)}, {"radii", radii}};
    out.update(to_json(v));
    int code = v.tag == GlobalVerdict::Tag::GlobalCenterConsistent ? exit_code::kConsistent
               : v.tag == GlobalVerdict::Tag::NotGlobal            ? exit_code::kNotGlobal
                                                                   : exit_code::kInconclusive;
    return {code, dump(out), ""};
  });
}

CommandResult cmd_portrait(const std::string& params_json, const PortraitSpec& spec) {
  return guarded([&]() -> CommandResult {
    FamilyParams p = parse_params(params_json);
    if (spec.width <= 0 || spec.height <= 0) throw ParseError("portrait size must be positive");
    spec.config.validate();
    return {0, render_portrait(build_system(p), spec), ""};
  });
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    double v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size() || !(v > 0) || !std::isfinite(v))
      throw ParseError("bad radius '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty radius list");
  return out;
}

}  // namespace gcenter
