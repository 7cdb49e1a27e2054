#include "rsl/cli/commands.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "rsl/cli/parse.hpp"
#include "rsl/core/format.hpp"
#include "rsl/errors.hpp"
#include "rsl/lfactor/lfactor.hpp"
#include "rsl/rs_integral/integral.hpp"
#include "rsl/whittaker/torus_function.hpp"

namespace rsl {

using nlohmann::json;

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "latex") return OutputFormat::kLatex;
  if (name == "json") return OutputFormat::kJson;
  throw PreconditionError("unknown format '" + std::string(name) + "' (text, latex, json)");
}

Cocharacter parse_cocharacter(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto fail = [&](const char* what) {
    std::string found = i < text.size() ? std::string(1, text[i]) : std::string();
    throw ParseError(i, {what}, found);
  };
  for (;;) {
    while (i < text.size() && text[i] == ' ') ++i;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("integer");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 100000) fail("smaller integer");
    }
    parts.push_back(static_cast<int>(neg ? -v : v));
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    if (text[i] != ',') fail("','");
    ++i;
  }
  return Cocharacter(std::move(parts));
}

int default_depth() {
  if (const char* env = std::getenv("RS_DEPTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 10000) return static_cast<int>(v);
  }
  return 20;
}

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string render(const BaseScalar& a, OutputFormat fmt) {
  return fmt == OutputFormat::kLatex ? to_latex(a) : to_text(a);
}

std::string render(const RationalFunction& r, OutputFormat fmt) {
  return fmt == OutputFormat::kLatex ? to_latex(r) : to_text(r);
}

LFactorSpec make_spec(const LFactorArgs& a) {
  return LFactorSpec::family(a.l, a.k, a.d, a.s0, a.right, a.distinct_inertial);
}

json spec_json(const LFactorArgs& a, const LFactorSpec& spec) {
  return {{"l", a.l},
          {"k", a.k},
          {"d", a.d},
          {"s0", a.s0.str()},
          {"distinct_inertial", a.distinct_inertial},
          {"left", to_string(spec.left())},
          {"right", to_string(spec.right())}};
}

std::string lk_latex(const LFactorSpec& spec) {
  return std::string("L(s, \\mathrm{St}_{") + std::to_string(spec.l()) + "}, \\mathrm{" +
         std::string(kind_name(spec.right().kind())) + "}_{" + std::to_string(spec.k()) + "})";
}

}  // namespace

CommandOutput lfactor_command(const LFactorArgs& a, OutputFormat fmt) {
  const auto spec = make_spec(a);
  const auto rf = l_steinberg_pair(spec);
  switch (fmt) {
    case OutputFormat::kJson: {
      json j = spec_json(a, spec);
      j["l_factor"] = to_json(rf);
      j["text"] = to_text(rf);
      return {dump(j)};
    }
    case OutputFormat::kLatex:
      return {lk_latex(spec) + " = " + to_latex(rf) + "\n"};
    case OutputFormat::kText:
      break;
  }
  return {"L(s, " + to_string(spec.left()) + ", " + to_string(spec.right()) + ") = " + to_text(rf) + "\n"};
}

CommandOutput pfd_command(const LFactorArgs& a, OutputFormat fmt) {
  const auto spec = make_spec(a);
  const auto target = l_steinberg_pair(spec);
  if (!spec.dual_equivalent()) {
    if (fmt == OutputFormat::kJson) {
      json j = spec_json(a, spec);
      j["l_factor"] = to_json(target);
      j["terms"] = json::array();
      j["note"] = "inertially distinct: the L-factor is 1 and has no poles";
      return {dump(j)};
    }
    return {"L-factor is 1 (inertially distinct); nothing to decompose\n"};
  }
  const auto pf = partial_fractions(spec);
  BaseScalar sum;
  for (const auto& t : pf.terms) sum += t.coefficient;
  const bool sum_ok = sum == BaseScalar(1);
  const bool recombines = recombine(pf) == target;
  const int code = sum_ok && recombines ? 0 : 1;
  const std::string var = a.d == 1 ? "X" : "X^" + std::to_string(a.d);

  if (fmt == OutputFormat::kJson) {
    json terms = json::array();
    for (std::size_t i = 0; i < pf.terms.size(); ++i) {
      terms.push_back({{"i", i},
                       {"pole", to_json(pf.terms[i].pole)},
                       {"coefficient", to_json(pf.terms[i].coefficient)},
                       {"pole_text", to_text(pf.terms[i].pole)},
                       {"coefficient_text", to_text(pf.terms[i].coefficient)}});
    }
    json j = spec_json(a, spec);
    j["variable"] = var;
    j["terms"] = std::move(terms);
    j["l_factor"] = to_json(target);
    j["sum_of_coefficients_is_one"] = sum_ok;
    j["recombination"] = recombines ? "pass" : "fail";
    return {dump(j), code};
  }
  std::ostringstream out;
  if (fmt == OutputFormat::kLatex) {
    out << lk_latex(spec) << " = ";
    for (std::size_t i = 0; i < pf.terms.size(); ++i) {
      if (i) out << " + ";
      out << "\\frac{" << to_latex(pf.terms[i].coefficient) << "}{1 - " << to_latex(pf.terms[i].pole)
          << (a.d == 1 ? " X" : " X^{" + std::to_string(a.d) + "}") << "}";
    }
    out << "\n";
  } else {
    out << "Y = " << var << "\n";
    for (std::size_t i = 0; i < pf.terms.size(); ++i) {
      out << "i=" << i << "  pole " << to_text(pf.terms[i].pole) << "  lambda " << to_text(pf.terms[i].coefficient)
          << "\n";
    }
  }
  out << (fmt == OutputFormat::kLatex ? "% " : "") << "sum of lambda_i = 1: " << (sum_ok ? "yes" : "no")
      << "; recombination: " << (recombines ? "pass" : "fail") << "\n";
  return {out.str(), code};
}

namespace {

CommandOutput scalar_output(const std::string& what, const Cocharacter& lambda, const BaseScalar& v,
                            OutputFormat fmt, json extra) {
  if (fmt == OutputFormat::kJson) {
    extra["lambda"] = lambda.parts();
    extra["value"] = to_json(v);
    extra["text"] = to_text(v);
    return {dump(extra)};
  }
  return {what + to_string(lambda) + " = " + render(v, fmt) + "\n"};
}

}  // namespace

CommandOutput whittaker_spherical_command(int sigma_k, const Cocharacter& lambda, OutputFormat fmt) {
  const auto params = SatakeParams::sigma(sigma_k);
  if (lambda.size() != sigma_k) throw PreconditionError("--lambda must have " + std::to_string(sigma_k) + " entries");
  const auto v = spherical_value(params, lambda);
  return scalar_output("W0[Sigma_" + std::to_string(sigma_k) + "]", lambda, v, fmt,
                       {{"function", "spherical"}, {"sigma", sigma_k}});
}

CommandOutput whittaker_essential_command(int l, const Cocharacter& lambda, OutputFormat fmt) {
  const auto v = essential_value(l, lambda);
  return scalar_output("Wess[St_" + std::to_string(l) + "]", lambda, v, fmt, {{"function", "essential"}, {"l", l}});
}

CommandOutput rs_integral_command(const RsIntegralArgs& a, OutputFormat fmt) {
  IntegralCase c = [&] {
    if (a.case_name == "steinberg-distinct") return steinberg_distinct_case(a.l, a.k, a.depth);
    if (a.case_name == "steinberg-equal") return steinberg_equal_case(a.l, a.depth);
    if (a.case_name == "spherical-cauchy") return spherical_cauchy_case(a.n, a.depth);
    if (a.case_name == "tate") return tate_case(a.depth);
    throw PreconditionError("unknown case '" + a.case_name +
                            "' (steinberg-distinct, steinberg-equal, spherical-cauchy, tate)");
  }();
  c.spec.jobs = a.jobs;
  const auto v = verify_identity(c.spec, c.closed);
  const int code = v.equal ? 0 : 1;
  if (fmt == OutputFormat::kJson) {
    json j = {{"case", c.name},
              {"series", to_json(v.computed)},
              {"closed_form", to_json(c.closed)},
              {"verdict", v.equal ? "equal" : "mismatch"}};
    j["first_mismatch"] = v.first_mismatch ? json(*v.first_mismatch) : json(nullptr);
    return {dump(j), code};
  }
  std::ostringstream out;
  const bool latex = fmt == OutputFormat::kLatex;
  out << (latex ? "% " : "") << c.name << "\n";
  out << "series = " << (latex ? to_latex(v.computed) : to_text(v.computed)) << "\n";
  out << "closed form = " << render(c.closed, fmt) << "\n";
  out << (latex ? "% " : "") << "verdict: " << (v.equal ? "equal" : "mismatch");
  if (v.first_mismatch) out << " (first mismatch at X^" << *v.first_mismatch << ")";
  out << " to depth " << v.depth << "\n";
  return {out.str(), code};
}

namespace {

json describe(const ParsedDescriptor& parsed) {
  if (const auto* s = std::get_if<Segment>(&parsed)) {
    return {{"kind", "Segment"},
            {"text", to_string(*s)},
            {"length", s->length()},
            {"start", s->start().str()},
            {"end", s->end().str()},
            {"e_value", s->e_value().str()},
            {"n", s->length() * s->datum().degree()}};
  }
  const auto& pi = std::get<RepDescriptor>(parsed);
  json j = {{"kind", std::string(kind_name(pi.kind()))}, {"text", to_string(pi)}, {"n", pi.group_size()}};
  if (pi.kind() != RepKind::kProduct) j["k"] = pi.k();
  if (pi.kind() != RepKind::kSpeh) {
    j["standard"] = is_standard(pi);
    j["generic"] = is_generic_product(pi);
  }
  if (pi.kind() == RepKind::kSteinberg || pi.kind() == RepKind::kSpeh) {
    j["zelevinsky_dual"] = to_string(zelevinsky_dual_discrete(pi));
  }
  if (pi.kind() == RepKind::kSteinberg || pi.kind() == RepKind::kStandardSigma) {
    json der = json::array();
    for (const auto& rho : derivative_multiset(pi, std::nullopt)) der.push_back(to_string(rho));
    j["derivative"] = std::move(der);
  }
  return j;
}

std::string json_value_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

CommandOutput segments_command(const std::vector<std::string>& descriptors, OutputFormat fmt) {
  if (descriptors.empty()) throw PreconditionError("give at least one descriptor");
  std::vector<ParsedDescriptor> parsed;
  json items = json::array();
  for (const auto& d : descriptors) {
    parsed.push_back(parse_descriptor(d));
    items.push_back(describe(parsed.back()));
  }
  json j = {{"descriptors", items}};
  if (parsed.size() == 2 && std::holds_alternative<Segment>(parsed[0]) && std::holds_alternative<Segment>(parsed[1])) {
    const auto& s = std::get<Segment>(parsed[0]);
    const auto& t = std::get<Segment>(parsed[1]);
    j["linked"] = linked(s, t);
    j["precedes"] = precedes(s, t);
  }
  if (fmt == OutputFormat::kJson) return {dump(j)};
  std::ostringstream out;
  for (const auto& item : items) {
    out << json_value_text(item["text"]) << "\n";
    for (const auto& [key, value] : item.items()) {
      if (key == "text") continue;
      out << "  " << key << ": ";
      if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << json_value_text(value[i]);
      } else {
        out << json_value_text(value);
      }
      out << "\n";
    }
  }
  if (j.contains("linked")) {
    out << "linked: " << j["linked"].dump() << "\nprecedes: " << j["precedes"].dump() << "\n";
  }
  return {out.str()};
}

CommandOutput verify_command(const VerifyOptions& options, OutputFormat fmt) {
  const auto report = run_verify(options);
  const int code = report.ok() ? 0 : 1;
  if (fmt == OutputFormat::kJson) return {dump(to_json(report)), code};
  return {to_text(report), code};
}

}  // namespace rsl
