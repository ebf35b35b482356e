#ifndef GCENTER_SERIALIZE_HPP
#define GCENTER_SERIALIZE_HPP

#include <gcenter/classify.hpp>
#include <gcenter/compactify.hpp>
#include <gcenter/desing.hpp>
#include <gcenter/family.hpp>
#include <gcenter/flow.hpp>

#include <json.hpp>

#include <string>

namespace gcenter {

// Key order is insertion order so that output bytes are stable.
using Json = nlohmann::ordered_json;

// Params schema: an object with exactly the keys a1 .. d2, each a rational
// string "p" or "p/q" or an integer. Throws ParseError.
FamilyParams params_from_json(const Json& j);
FamilyParams parse_params(const std::string& text);
Json to_json(const FamilyParams& p);

Json to_json(const VectorField& vf, const VarNames& names = kUV);
Json to_json(const RealRoot& r);
Json to_json(const InfinityReport& r);
Json to_json(const BlowupChain& chain);
Json to_json(const EquilibriumClass& c, const Matrix2& jacobian);
Json to_json(const CenterReport& c);
Json to_json(const GlobalReport& g);
Json to_json(const IntegratorConfig& cfg);
Json to_json(const OrbitVerdict& v);
Json to_json(const GlobalVerdict& v);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace gcenter

#endif
