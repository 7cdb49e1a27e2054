#ifndef RSL_WHITTAKER_SCHUR_HPP
#define RSL_WHITTAKER_SCHUR_HPP

#include <vector>

#include "rsl/core/base_scalar.hpp"
#include "rsl/core/half_int.hpp"
#include "rsl/whittaker/cocharacter.hpp"

namespace rsl {

// Values at w of the unramified characters inducing a standard module.
class SatakeParams {
 public:
  explicit SatakeParams(std::vector<BaseScalar> alphas);  // throws DomainError on a zero entry
  // nu^t Sigma_k(1): q^{(k+1-2i)/2 - t}, i = 1..k.
  static SatakeParams sigma(int k, HalfInt twist = {});

  int size() const { return static_cast<int>(alphas_.size()); }
  const BaseScalar& operator[](int i) const { return alphas_[i]; }
  const std::vector<BaseScalar>& alphas() const { return alphas_; }
  BaseScalar product() const;

  friend bool operator==(const SatakeParams&, const SatakeParams&) = default;

 private:
  std::vector<BaseScalar> alphas_;
};

// Division-free determinant (Laplace over column subsets).
BaseScalar determinant(const std::vector<std::vector<BaseScalar>>& m);

// h_0..h_max of the parameters.
std::vector<BaseScalar> complete_homogeneous(const SatakeParams& alphas, int max_degree);

// s_lambda(alpha) by Jacobi-Trudi; negative dominant lambda via
// s_lambda = (prod alpha)^{lambda_n} s_{lambda - lambda_n}.
// Throws PreconditionError on length mismatch or non-dominant lambda.
BaseScalar schur(const SatakeParams& alphas, const Cocharacter& lambda);
// Same value as a ratio of alternants. Needs distinct parameters
// (DomainError otherwise).
BaseScalar schur_bialternant(const SatakeParams& alphas, const Cocharacter& lambda);

// delta_{B_n}(w^lambda)^{1/2} = q^{-sum (n+1-2i) lambda_i / 2}.
BaseScalar modulus_sqrt(const Cocharacter& lambda);

}  // namespace rsl

#endif  // RSL_WHITTAKER_SCHUR_HPP
