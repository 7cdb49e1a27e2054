#ifndef RSL_WHITTAKER_TORUS_FUNCTION_HPP
#define RSL_WHITTAKER_TORUS_FUNCTION_HPP

#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "rsl/core/base_scalar.hpp"
#include "rsl/core/half_int.hpp"
#include "rsl/whittaker/cocharacter.hpp"
#include "rsl/whittaker/schur.hpp"

namespace rsl {

// Shintani: delta^{1/2}(w^lambda) s_lambda(alpha) on dominant lambda, 0 otherwise.
BaseScalar spherical_value(const SatakeParams& alphas, const Cocharacter& lambda);

// Essential vector of St_l(1) on diag(w^mu, 1), mu of length l-1:
// q^{-mu_1 (l-1)} if mu = (mu_1 >= 0, 0, ..., 0), else 0.
BaseScalar essential_value(int l, const Cocharacter& mu);

// Normalized spherical Whittaker function of an unramified standard module.
struct Spherical {
  SatakeParams params;
};
// W_l^ess of St_l(1), extended off diag(*, 1) by the trivial central character.
struct EssentialSteinberg {
  int l;
};
// nu^e on GL_1: w^v -> q^{-e v}.
struct UnramifiedCharacter {
  HalfInt exponent;
};
// Vector of GL_n whose restriction to diag(w^v, I_{n-1}) is
// q^{-v(n-1)/2} q^{-e v} 1_{v >= 0}; zero on the rest of the torus.
// Pairs with a GL_1 character to a single factor L(s + e, ., .).
struct MirabolicLift {
  int n;
  HalfInt exponent;
};

class TorusFunction {
 public:
  using Variant = std::variant<Spherical, EssentialSteinberg, UnramifiedCharacter, MirabolicLift>;

  TorusFunction(Variant v);  // validates sizes
  template <class Alt>
    requires std::is_constructible_v<Variant, Alt>
  TorusFunction(Alt alt) : TorusFunction(Variant(std::move(alt))) {}
  static TorusFunction spherical_sigma(int k, HalfInt twist = {}) { return Spherical{SatakeParams::sigma(k, twist)}; }
  static TorusFunction trivial() { return UnramifiedCharacter{}; }

  int size() const;
  const Variant& variant() const { return v_; }
  // Value at w^lambda; throws PreconditionError unless lambda has length size().
  BaseScalar operator()(const Cocharacter& lambda) const;
  std::string describe() const;

 private:
  Variant v_;
};

}  // namespace rsl

#endif  // RSL_WHITTAKER_TORUS_FUNCTION_HPP
