// gcenter: command-line front end for the center / global-center toolkit.

#include <gcenter/commands.hpp>
#include <gcenter/errors.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gcenter::ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const gcenter::CommandResult& r, const std::string& out_path) {
  if (!r.error.empty()) std::cerr << "gcenter: " << r.error << "\n";
  if (r.output.empty()) return r.exit_code;
  if (out_path.empty()) {
    std::cout << r.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "gcenter: cannot write '" << out_path << "'\n";
      return gcenter::exit_code::kComputeError;
    }
    out << r.output;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Center and global-center analysis for a cubic planar polynomial family"};
  app.require_subcommand(1);

  std::string params_path, chart = "u1", steps, out_path, radii_text = "0.5,1,2,5";
  gcenter::IntegratorConfig cfg;
  int width = 600, height = 600;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--params", params_path, "parameter JSON file")->required();
    sub->add_option("--out", out_path, "output file (default stdout)");
  };
  auto add_flow = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.section_closure_tol, "return-map closure tolerance");
    sub->add_option("--max-time", cfg.max_time, "integration time limit");
    sub->add_option("--radii", radii_text, "comma-separated sample radii");
  };

  auto* decide = app.add_subcommand("decide", "exact center / global-center decision");
  add_common(decide);
  auto* compactify = app.add_subcommand("compactify", "chart field and infinite equilibria");
  add_common(compactify);
  compactify->add_option("--chart", chart, "u1 or u2");
  auto* blowup = app.add_subcommand("blowup", "apply a chain of blow-up steps in a chart");
  add_common(blowup);
  blowup->add_option("--chart", chart, "u1 or u2");
  blowup->add_option("--steps", steps, "e.g. blowup,rescale:u:1,shear:-1")->required();
  auto* verify = app.add_subcommand("verify", "numerical global-center verification");
  add_common(verify);
  add_flow(verify);
  auto* portrait = app.add_subcommand("portrait", "SVG phase portrait on the disc");
  add_common(portrait);
  add_flow(portrait);
  portrait->add_option("--width", width, "pixels");
  portrait->add_option("--height", height, "pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : gcenter::exit_code::kParseError;
  }

  std::string params;
  std::vector<double> radii;
  try {
    params = read_file(params_path);
    radii = gcenter::parse_radii(radii_text);
  } catch (const gcenter::ParseError& e) {
    std::cerr << "gcenter: " << e.what() << "\n";
    return gcenter::exit_code::kParseError;
  }

  if (*decide) return emit(gcenter::cmd_decide(params), out_path);
  if (*compactify) return emit(gcenter::cmd_compactify(params, chart), out_path);
  if (*blowup) return emit(gcenter::cmd_blowup(params, chart, steps), out_path);
  if (*verify) return emit(gcenter::cmd_verify(params, cfg, radii), out_path);
  gcenter::PortraitSpec spec;
  spec.width = width;
  spec.height = height;
  spec.config = cfg;
  spec.seeds = gcenter::sample_points(radii);
  return emit(gcenter::cmd_portrait(params, spec), out_path);
}
