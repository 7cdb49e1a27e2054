// rsl: command-line front end for the L-factor / Rankin-Selberg engine.
// Exit codes: 0 success, 1 identity failure, 2 usage error.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsl/cli/commands.hpp"
#include "rsl/cli/verify.hpp"
#include "rsl/errors.hpp"

namespace {

constexpr int kUsage = 2;

rsl::RepKind parse_right_kind(const std::string& s) {
  if (s == "St") return rsl::RepKind::kSteinberg;
  if (s == "Sigma") return rsl::RepKind::kStandardSigma;
  if (s == "Sp") return rsl::RepKind::kSpeh;
  throw rsl::PreconditionError("--right must be St, Sigma or Sp");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact L-factors, Whittaker values and Rankin-Selberg torus sums"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text | latex | json")->check(CLI::IsMember({"text", "latex", "json"}));

  // lfactor / pfd
  int l = 2, k = 1, d = 1;
  std::string s0 = "0", right = "St";
  bool distinct = false;
  auto add_lk = [&](CLI::App* sub) {
    sub->add_option("--l", l, "size of the left Steinberg St_l")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", k, "size of the right representation")->required()->check(CLI::PositiveNumber);
    sub->add_option("--d", d, "torsion d = |R(rho)| (rho has degree d)")->check(CLI::PositiveNumber);
    sub->add_option("--s0", s0, "half-integer shift, e.g. 1/2");
    sub->add_option("--right", right, "St | Sigma | Sp")->check(CLI::IsMember({"St", "Sigma", "Sp"}));
    sub->add_flag("--distinct-inertial", distinct, "take rho' outside the inertial class of rho^vee");
    sub->add_option("--format", format, "text | latex | json")->check(CLI::IsMember({"text", "latex", "json"}));
  };
  auto* lfactor = app.add_subcommand("lfactor", "closed form of L(s + s0, St_l(rho), St_k/Sigma_k/Sp_k(rho'))");
  add_lk(lfactor);
  auto* pfd = app.add_subcommand("pfd", "partial fractions of the L-factor in Y = X^d");
  add_lk(pfd);

  // whittaker
  auto* whittaker = app.add_subcommand("whittaker", "Whittaker values on the torus");
  whittaker->require_subcommand(1);
  int sigma_k = 2, ess_l = 2;
  std::string lambda;
  auto* spherical = whittaker->add_subcommand("spherical", "normalized spherical vector of Sigma_K");
  spherical->add_option("--sigma", sigma_k, "K")->required()->check(CLI::PositiveNumber);
  spherical->add_option("--lambda", lambda, "cocharacter, e.g. 2,1,0")->required();
  spherical->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));
  auto* essential = whittaker->add_subcommand("essential", "essential vector of St_l(1) on diag(w^lambda, 1)");
  essential->add_option("--l", ess_l, "l >= 2")->required();
  essential->add_option("--lambda", lambda, "cocharacter of length l-1, e.g. 3,0,0")->required();
  essential->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

  // rs-integral
  rsl::RsIntegralArgs rs;
  rs.depth = rsl::default_depth();
  auto* integral = app.add_subcommand("rs-integral", "evaluate a Rankin-Selberg integral and compare with its L-factor");
  integral->add_option("--case", rs.case_name, "steinberg-distinct | steinberg-equal | spherical-cauchy | tate")
      ->required()
      ->check(CLI::IsMember({"steinberg-distinct", "steinberg-equal", "spherical-cauchy", "tate"}));
  integral->add_option("--l", rs.l);
  integral->add_option("--k", rs.k);
  integral->add_option("--n", rs.n);
  integral->add_option("--depth", rs.depth, "truncation order (default RS_DEPTH or 20)")->check(CLI::NonNegativeNumber);
  integral->add_option("--jobs", rs.jobs)->check(CLI::PositiveNumber);
  integral->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

  // segments
  std::vector<std::string> descriptors;
  auto* segments = app.add_subcommand("segments", "parse and describe segments and representations");
  segments->add_option("descriptors", descriptors, "e.g. 'St(3)@rho(r=2,d=2)' '[0,1]@rho'")->required();
  segments->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

  // verify
  rsl::VerifyOptions vopt;
  vopt.depth = rsl::default_depth();
  auto* verify = app.add_subcommand("verify", "run the identity battery");
  verify->add_option("--suite", vopt.suite)->check(CLI::IsMember(rsl::verify_suites()));
  verify->add_option("--max-l", vopt.max_l)->check(CLI::PositiveNumber);
  verify->add_option("--depth", vopt.depth)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopt.seed);
  verify->add_option("--jobs", vopt.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const auto fmt = rsl::parse_format(format);
    rsl::CommandOutput out;
    if (lfactor->parsed() || pfd->parsed()) {
      rsl::LFactorArgs a{l, k, d, rsl::HalfInt::parse(s0), distinct, parse_right_kind(right)};
      out = lfactor->parsed() ? rsl::lfactor_command(a, fmt) : rsl::pfd_command(a, fmt);
    } else if (spherical->parsed()) {
      out = rsl::whittaker_spherical_command(sigma_k, rsl::parse_cocharacter(lambda), fmt);
    } else if (essential->parsed()) {
      out = rsl::whittaker_essential_command(ess_l, rsl::parse_cocharacter(lambda), fmt);
    } else if (integral->parsed()) {
      out = rsl::rs_integral_command(rs, fmt);
    } else if (segments->parsed()) {
      out = rsl::segments_command(descriptors, fmt);
    } else if (verify->parsed()) {
      out = rsl::verify_command(vopt, fmt);
    }
    std::cout << out.text;
    return out.exit_code;
  } catch (const rsl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const rsl::SemanticError& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return kUsage;
  } catch (const rsl::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const rsl::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
