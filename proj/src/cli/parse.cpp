#include "rsl/cli/parse.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "rsl/errors.hpp"

namespace rsl {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Rethrow builder failures as semantic errors.
template <class F>
auto semantic(F&& f) {
  try {
    return f();
  } catch (const SemanticError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw SemanticError(e.what());
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ParsedDescriptor input() {
    std::vector<ParsedDescriptor> items{item()};
    while (separator()) items.push_back(item());
    skip_ws();
    if (pos_ != s_.size()) fail({"'x'", "end of input"});
    if (items.size() == 1) return items.front();
    std::vector<Segment> segments;
    for (const auto& it : items) {
      if (const auto* seg = std::get_if<Segment>(&it)) {
        segments.push_back(*seg);
        continue;
      }
      const auto& rep = std::get<RepDescriptor>(it);
      if (rep.kind() == RepKind::kSpeh) throw SemanticError("Sp_k is not a product of segments; it cannot be a factor");
      for (const auto& s : semantic([&] { return rep.discrete_factors(); })) segments.push_back(s);
    }
    return semantic([&] { return RepDescriptor::product(std::move(segments)); });
  }

  CuspidalDatum datum_only() {
    auto d = datum();
    skip_ws();
    if (pos_ != s_.size()) fail({"end of input"});
    return d;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < s_.size() ? std::string(1, s_[pos_]) : std::string();
    throw ParseError(pos_, std::move(expected), found);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  // 'x' as a standalone token.
  bool separator() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'x' && (pos_ + 1 == s_.size() || !ident_char(s_[pos_ + 1]))) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail({"identifier"});
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail({"integer"});
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) {
        pos_ = start;
        fail({"integer below 1000000"});
      }
    }
    return static_cast<int>(v);
  }

  HalfInt half() {
    const bool negative = accept('-');
    const int num = integer();
    int twice = 2 * num;
    if (accept('/')) {
      const std::size_t at = pos_;
      const int den = integer();
      if (den != 2) {
        pos_ = at;
        skip_ws();
        fail({"'2'"});
      }
      twice = num;
    }
    return HalfInt::from_twice(negative ? -twice : twice);
  }

  CuspidalDatum datum() {
    const std::string label = ident();
    bool dual = accept('^');
    int r = 1;
    int d = 1;
    HalfInt twist;
    if (accept('(')) {
      do {
        const std::size_t at = (skip_ws(), pos_);
        const std::string key = ident();
        if (key == "dual") {
          dual = true;
        } else if (key == "r" || key == "d" || key == "twist") {
          expect('=');
          if (key == "r") r = integer();
          else if (key == "d") d = integer();
          else twist = half();
        } else {
          pos_ = at;
          fail({"'r='", "'d='", "'twist='", "'dual'"});
        }
      } while (accept(','));
      expect(')');
    }
    return semantic([&] { return CuspidalDatum(label, r, d, dual, twist); });
  }

  ParsedDescriptor item() {
    if (accept('[')) {
      const HalfInt a = half();
      expect(',');
      const HalfInt b = half();
      expect(']');
      expect('@');
      const CuspidalDatum rho = datum();
      return semantic([&] { return Segment(rho, a, b); });
    }
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail({"'['", "'St'", "'Sp'", "'Sigma'"});
    const std::size_t at = pos_;
    const std::string kind = ident();
    if (kind != "St" && kind != "Sp" && kind != "Sigma") {
      pos_ = at;
      fail({"'['", "'St'", "'Sp'", "'Sigma'"});
    }
    expect('(');
    const int k = integer();
    expect(')');
    expect('@');
    const CuspidalDatum rho = datum();
    return semantic([&]() -> RepDescriptor {
      if (k < 1) throw SemanticError(kind + " needs k >= 1");
      if (kind == "St") return RepDescriptor::steinberg(k, rho);
      if (kind == "Sp") return RepDescriptor::speh(k, rho);
      return RepDescriptor::sigma(k, rho);
    });
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedDescriptor parse_descriptor(std::string_view text) { return Parser(text).input(); }

RepDescriptor parse_representation(std::string_view text) {
  auto parsed = parse_descriptor(text);
  if (auto* seg = std::get_if<Segment>(&parsed)) return RepDescriptor::product({*seg});
  return std::get<RepDescriptor>(parsed);
}

CuspidalDatum parse_cuspidal(std::string_view text) { return Parser(text).datum_only(); }

}  // namespace rsl
