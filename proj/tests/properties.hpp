// Randomized property checks, shared by the standalone property runner and the
// acceptance binary.
#ifndef GCENTER_TESTS_PROPERTIES_HPP
#define GCENTER_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gcenter::testing {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

inline constexpr std::uint64_t kPropertySeed = 0x5eed'c0de'2024ULL;

std::vector<PropertyResult> run_properties(std::uint64_t seed = kPropertySeed);

}  // namespace gcenter::testing

#endif
