#ifndef RSL_CLI_COMMANDS_HPP
#define RSL_CLI_COMMANDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rsl/cli/verify.hpp"
#include "rsl/core/half_int.hpp"
#include "rsl/segments/descriptor.hpp"
#include "rsl/whittaker/cocharacter.hpp"

namespace rsl {

enum class OutputFormat { kText, kLatex, kJson };

// "text" | "latex" | "json"; PreconditionError otherwise.
OutputFormat parse_format(std::string_view name);
// "2,1,0" -> (2,1,0); ParseError on bad input.
Cocharacter parse_cocharacter(std::string_view text);
// RS_DEPTH if set to a nonnegative integer, else 20.
int default_depth();

struct CommandOutput {
  std::string text;  // ends with a newline
  int exit_code = 0;
};

struct LFactorArgs {
  int l = 2;
  int k = 1;
  int d = 1;
  HalfInt s0;
  bool distinct_inertial = false;
  RepKind right = RepKind::kSteinberg;
};

CommandOutput lfactor_command(const LFactorArgs& args, OutputFormat fmt);
// lambda_i table plus a recombination check; exit 1 if it fails.
CommandOutput pfd_command(const LFactorArgs& args, OutputFormat fmt);

CommandOutput whittaker_spherical_command(int sigma_k, const Cocharacter& lambda, OutputFormat fmt);
CommandOutput whittaker_essential_command(int l, const Cocharacter& lambda, OutputFormat fmt);

struct RsIntegralArgs {
  std::string case_name = "tate";  // steinberg-distinct | steinberg-equal | spherical-cauchy | tate
  int l = 3;
  int k = 2;
  int n = 2;
  int depth = 20;
  int jobs = 1;
};
// Exit 1 when the series and the closed form disagree.
CommandOutput rs_integral_command(const RsIntegralArgs& args, OutputFormat fmt);

// Describes each parsed descriptor; with exactly two segments also reports
// linked / precedes.
CommandOutput segments_command(const std::vector<std::string>& descriptors, OutputFormat fmt);

// Exit 1 on any failed identity.
CommandOutput verify_command(const VerifyOptions& options, OutputFormat fmt);

}  // namespace rsl

#endif  // RSL_CLI_COMMANDS_HPP
