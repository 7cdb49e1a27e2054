#include "rsl/core/format.hpp"

#include <sstream>
#include <vector>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

using nlohmann::json;

enum class Style { kText, kLatex };

std::string q_power(int u_exp, Style style) {
  if (u_exp == 0) return "";
  const HalfInt h = HalfInt::from_twice(u_exp);
  if (h == HalfInt::from_int(1)) return "q";
  if (style == Style::kLatex) return "q^{" + h.str() + "}";
  if (h.is_integer() && h.twice() > 0) return "q^" + h.str();
  return "q^(" + h.str() + ")";
}

std::string rational_coeff(const BigRational& c, Style style) {
  if (style == Style::kLatex && c.get_den() != 1) {
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
  }
  return rational_str(c);
}

// Terms of num(u) * u^{-shift}, highest power of q first.
std::vector<std::string> laurent_terms(const UPoly& num, int shift, Style style) {
  std::vector<std::string> terms;
  for (auto it = num.terms().rbegin(); it != num.terms().rend(); ++it) {
    const std::string mono = q_power(it->first - shift, style);
    const BigRational& c = it->second;
    std::string term;
    if (mono.empty()) {
      term = rational_coeff(c, style);
    } else if (c == 1) {
      term = mono;
    } else if (c == -1) {
      term = "-" + mono;
    } else {
      term = rational_coeff(c, style) + (style == Style::kLatex ? " " : "*") + mono;
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i].front() == '-') {
      out += " - " + terms[i].substr(1);
    } else {
      out += " + " + terms[i];
    }
  }
  return out;
}

bool is_compound(const std::string& s) {
  return s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
}

std::string scalar_str(const BaseScalar& a, Style style) {
  if (a.is_laurent()) return join_terms(laurent_terms(a.num(), a.den().degree(), style));
  const std::string n = join_terms(laurent_terms(a.num(), 0, style));
  const std::string d = join_terms(laurent_terms(a.den(), 0, style));
  if (style == Style::kLatex) return "\\frac{" + n + "}{" + d + "}";
  auto wrap = [](const std::string& s) { return is_compound(s) ? "(" + s + ")" : s; };
  return wrap(n) + "/" + wrap(d);
}

std::string x_power(std::size_t i, const std::string& var, Style style) {
  if (i == 0) return "";
  if (i == 1) return var;
  if (style == Style::kLatex) return var + "^{" + std::to_string(i) + "}";
  return var + "^" + std::to_string(i);
}

std::string poly_str(const std::vector<BaseScalar>& coeffs, const std::string& var, Style style) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::string c = scalar_str(coeffs[i], style);
    const std::string x = x_power(i, var, style);
    if (x.empty()) {
      terms.push_back(is_compound(c) && style == Style::kText && i + 1 < coeffs.size() ? "(" + c + ")" : c);
      continue;
    }
    bool negative = false;
    if (!is_compound(c) && c.front() == '-') {
      negative = true;
      c.erase(0, 1);
    }
    std::string term;
    if (c == "1") {
      term = x;
    } else if (is_compound(c)) {
      term = (style == Style::kLatex ? "\\left(" + c + "\\right) " : "(" + c + ")*") + x;
    } else {
      term = c + (style == Style::kLatex ? " " : "*") + x;
    }
    terms.push_back(negative ? "-" + term : term);
  }
  return join_terms(terms);
}

std::string rf_str(const RationalFunction& r, const std::string& var, Style style) {
  const std::string n = poly_str(r.num().coeffs(), var, style);
  if (r.den() == XPoly::one()) return n;
  const std::string d = poly_str(r.den().coeffs(), var, style);
  if (style == Style::kLatex) return "\\frac{" + n + "}{" + d + "}";
  auto wrap = [](const std::string& s) { return is_compound(s) ? "(" + s + ")" : s; };
  return wrap(n) + " / " + wrap(d);
}

std::string series_str(const TruncatedSeries& s, const std::string& var, Style style) {
  std::string body = poly_str(s.coeffs(), var, style);
  const std::string big_o = style == Style::kLatex
                                ? "O(" + var + "^{" + std::to_string(s.order() + 1) + "})"
                                : "O(" + var + "^" + std::to_string(s.order() + 1) + ")";
  return (body == "0" ? std::string() : body + " + ") + big_o;
}

json upoly_json(const UPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, rational_str(c)}));
  return terms;
}

UPoly upoly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError(0, {"array of [exponent, \"p/q\"] pairs"}, j.dump());
  UPoly::Terms terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw ParseError(0, {"[exponent, \"p/q\"]"}, t.dump());
    }
    const int e = t[0].get<int>();
    if (e < 0) throw ParseError(0, {"nonnegative exponent"}, t.dump());
    if (terms.contains(e)) throw ParseError(0, {"distinct exponents"}, t.dump());
    terms.emplace(e, parse_rational(t[1].get<std::string>()));
  }
  return UPoly::from_terms(terms);
}

std::vector<BaseScalar> scalars_from_json(const json& j) {
  if (!j.is_array()) throw ParseError(0, {"array of scalars"}, j.dump());
  std::vector<BaseScalar> out;
  for (const auto& s : j) out.push_back(base_scalar_from_json(s));
  return out;
}

}  // namespace

std::string to_text(const BaseScalar& a) { return scalar_str(a, Style::kText); }
std::string to_text(const XPoly& p, const std::string& var) { return poly_str(p.coeffs(), var, Style::kText); }
std::string to_text(const RationalFunction& r, const std::string& var) { return rf_str(r, var, Style::kText); }
std::string to_text(const TruncatedSeries& s, const std::string& var) { return series_str(s, var, Style::kText); }

std::string to_latex(const BaseScalar& a) { return scalar_str(a, Style::kLatex); }
std::string to_latex(const XPoly& p, const std::string& var) { return poly_str(p.coeffs(), var, Style::kLatex); }
std::string to_latex(const RationalFunction& r, const std::string& var) { return rf_str(r, var, Style::kLatex); }
std::string to_latex(const TruncatedSeries& s, const std::string& var) { return series_str(s, var, Style::kLatex); }

json to_json(const BaseScalar& a) { return json{{"num", upoly_json(a.num())}, {"den", upoly_json(a.den())}}; }

json to_json(const RationalFunction& r) {
  json num = json::array();
  json den = json::array();
  for (const auto& c : r.num().coeffs()) num.push_back(to_json(c));
  for (const auto& c : r.den().coeffs()) den.push_back(to_json(c));
  return json{{"var", "X"}, {"num", num}, {"den", den}};
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return json{{"var", "X"}, {"order", s.order()}, {"coefficients", coeffs}};
}

BaseScalar base_scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError(0, {"{\"num\": ..., \"den\": ...}"}, j.dump());
  }
  return BaseScalar::from_parts(upoly_from_json(j.at("num")), upoly_from_json(j.at("den")));
}

RationalFunction rational_function_from_json(const json& j) {
  if (!j.is_object() || j.value("var", "") != "X" || !j.contains("num") || !j.contains("den")) {
    throw ParseError(0, {"{\"var\": \"X\", \"num\": [...], \"den\": [...]}"}, j.dump());
  }
  return RationalFunction::normalize(XPoly(scalars_from_json(j.at("num"))),
                                     XPoly(scalars_from_json(j.at("den"))));
}

TruncatedSeries truncated_series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coefficients")) {
    throw ParseError(0, {"{\"order\": D, \"coefficients\": [...]}"}, j.dump());
  }
  const auto order = j.at("order").get<std::size_t>();
  auto coeffs = scalars_from_json(j.at("coefficients"));
  if (coeffs.size() != order + 1) throw ParseError(0, {"order + 1 coefficients"}, j.dump());
  return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace rsl
