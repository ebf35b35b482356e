#ifndef GCENTER_COMMANDS_HPP
#define GCENTER_COMMANDS_HPP

#include <gcenter/flow.hpp>
#include <gcenter/portrait.hpp>

#include <string>
#include <vector>

namespace gcenter {

// Outcome of one CLI command. `output` is the report body and is left empty
// on error paths; `error` carries the message for stderr.
struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

namespace exit_code {
inline constexpr int kGlobal = 0;
inline constexpr int kCenterNotGlobal = 1;
inline constexpr int kNoCenter = 2;
inline constexpr int kConsistent = 0;
inline constexpr int kNotGlobal = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kParseError = 3;
inline constexpr int kComputeError = 4;
}  // namespace exit_code

// All commands take the params file contents, not a path.
CommandResult cmd_decide(const std::string& params_json);
CommandResult cmd_compactify(const std::string& params_json, const std::string& chart);
CommandResult cmd_blowup(const std::string& params_json, const std::string& chart,
                         const std::string& steps);
CommandResult cmd_verify(const std::string& params_json, const IntegratorConfig& cfg,
                         const std::vector<double>& radii = kDefaultRadii);
CommandResult cmd_portrait(const std::string& params_json, const PortraitSpec& spec);

// "0.5,1,2" -> {0.5, 1, 2}; throws ParseError.
std::vector<double> parse_radii(const std::string& text);

}  // namespace gcenter

#endif
