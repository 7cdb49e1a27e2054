#ifndef RSL_CLI_VERIFY_HPP
#define RSL_CLI_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rsl {

struct VerifyOptions {
  std::string suite = "all";  // see verify_suites()
  int max_l = 5;
  int depth = 20;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct IdentityResult {
  std::string name;    // "<suite>/<instance>", unique; the report is sorted by it
  std::string suite;
  std::string anchor;  // the identity being checked, as a formula
  bool expect_equal = true;  // false for negative controls
  bool observed_equal = false;
  std::optional<std::size_t> first_mismatch;
  std::string detail;

  bool passed() const { return expect_equal == observed_equal; }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<IdentityResult> results;
  bool ok() const;
  std::size_t failures() const;
};

// "tate", "different-steinberg", "equal-steinberg", "cauchy", "key",
// "three-way", "mutation", "properties", "all".
const std::vector<std::string>& verify_suites();

// Throws PreconditionError on an unknown suite or nonsensical bounds.
VerifyReport run_verify(const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace rsl

#endif  // RSL_CLI_VERIFY_HPP
