#include "rsl/whittaker/torus_function.hpp"

#include "rsl/errors.hpp"

namespace rsl {

BaseScalar spherical_value(const SatakeParams& alphas, const Cocharacter& lambda) {
  if (alphas.size() != lambda.size()) throw PreconditionError("cocharacter length does not match the parameters");
  if (!lambda.is_dominant()) return BaseScalar();
  return modulus_sqrt(lambda) * schur(alphas, lambda);
}

BaseScalar essential_value(int l, const Cocharacter& mu) {
  if (l < 2) throw PreconditionError("essential vector needs l >= 2");
  if (mu.size() != l - 1) throw PreconditionError("essential vector of St_l takes a cocharacter of length l-1");
  if (mu[0] < 0) return BaseScalar();
  for (int i = 1; i < mu.size(); ++i) {
    if (mu[i] != 0) return BaseScalar();
  }
  return BaseScalar::u_power(-2 * mu[0] * (l - 1));
}

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

}  // namespace

TorusFunction::TorusFunction(Variant v) : v_(std::move(v)) {
  std::visit(Overloaded{
                 [](const Spherical& s) {
                   if (s.params.size() < 1) throw PreconditionError("spherical vector needs n >= 1");
                 },
                 [](const EssentialSteinberg& e) {
                   if (e.l < 2) throw PreconditionError("essential vector needs l >= 2");
                 },
                 [](const UnramifiedCharacter&) {},
                 [](const MirabolicLift& m) {
                   if (m.n < 1) throw PreconditionError("mirabolic lift needs n >= 1");
                 },
             },
             v_);
}

int TorusFunction::size() const {
  return std::visit(Overloaded{
                        [](const Spherical& s) { return s.params.size(); },
                        [](const EssentialSteinberg& e) { return e.l; },
                        [](const UnramifiedCharacter&) { return 1; },
                        [](const MirabolicLift& m) { return m.n; },
                    },
                    v_);
}

BaseScalar TorusFunction::operator()(const Cocharacter& lambda) const {
  if (lambda.size() != size()) throw PreconditionError("cocharacter length does not match the group");
  return std::visit(
      Overloaded{
          [&](const Spherical& s) { return spherical_value(s.params, lambda); },
          [&](const EssentialSteinberg& e) {
            // trivial central character: w^lambda = w^{lambda_l} diag(w^{lambda - lambda_l}, 1)
            const int last = lambda[e.l - 1];
            std::vector<int> mu;
            for (int i = 0; i + 1 < e.l; ++i) mu.push_back(lambda[i] - last);
            return essential_value(e.l, Cocharacter(std::move(mu)));
          },
          [&](const UnramifiedCharacter& c) { return BaseScalar::u_power(-c.exponent.twice() * lambda[0]); },
          [&](const MirabolicLift& m) {
            const int v = lambda[0];
            if (v < 0) return BaseScalar();
            for (int i = 1; i < m.n; ++i) {
              if (lambda[i] != 0) return BaseScalar();
            }
            return BaseScalar::u_power(-v * (m.n - 1) - m.exponent.twice() * v);
          },
      },
      v_);
}

std::string TorusFunction::describe() const {
  return std::visit(Overloaded{
                        [](const Spherical& s) { return "spherical(n=" + std::to_string(s.params.size()) + ")"; },
                        [](const EssentialSteinberg& e) { return "essential St(" + std::to_string(e.l) + ")"; },
                        [](const UnramifiedCharacter& c) { return "nu^" + c.exponent.str(); },
                        [](const MirabolicLift& m) {
                          return "mirabolic(n=" + std::to_string(m.n) + ",e=" + m.exponent.str() + ")";
                        },
                    },
                    v_);
}

}  // namespace rsl
