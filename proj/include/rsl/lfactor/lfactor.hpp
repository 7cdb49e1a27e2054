#ifndef RSL_LFACTOR_LFACTOR_HPP
#define RSL_LFACTOR_LFACTOR_HPP

#include <vector>

#include "rsl/core/base_scalar.hpp"
#include "rsl/core/half_int.hpp"
#include "rsl/core/rational_function.hpp"
#include "rsl/segments/cuspidal.hpp"
#include "rsl/segments/descriptor.hpp"

namespace rsl {

// L(s, St_l(rho), pi') for pi' one of St_k(rho'), Sigma_k(rho'), Sp_k(rho'),
// evaluated at s + s0.
class LFactorSpec {
 public:
  // Throws PreconditionError unless left is St_l, right is St_k / Sigma_k /
  // Sp_k, and l >= k >= 1.
  LFactorSpec(RepDescriptor left, RepDescriptor right, HalfInt s0 = {});

  // rho of degree r = d with torsion d; rho' = rho^vee, or an unrelated
  // cuspidal when distinct_inertial is set.
  static LFactorSpec family(int l, int k, int d, HalfInt s0 = {},
                            RepKind right_kind = RepKind::kSteinberg,
                            bool distinct_inertial = false);

  const RepDescriptor& left() const { return left_; }
  const RepDescriptor& right() const { return right_; }
  HalfInt s0() const { return s0_; }
  int l() const { return left_.k(); }
  int k() const { return right_.k(); }
  int d() const { return left_.datum().torsion(); }
  // rho' is an unramified twist of rho^vee.
  bool dual_equivalent() const;
  // s0 plus the unramified twist t with rho' = nu^t rho^vee.
  HalfInt total_shift() const;

 private:
  RepDescriptor left_;
  RepDescriptor right_;
  HalfInt s0_;
};

// L(s + shift, rho, rho'): 1/(1 - q^{-c d} X^d) with c = shift + t when
// rho' = nu^t rho^vee, and 1 otherwise.
RationalFunction l_cuspidal_pair(const CuspidalDatum& rho, const CuspidalDatum& rho_prime,
                                 HalfInt shift = {});

// Closed form of L(s + s0, St_l(rho), right). St_k uses the product
// over i = 1..k of L(s + s0, nu^{(l-1)/2} rho, nu^{(k+1-2i)/2} rho^vee);
// Sigma_k and Sp_k multiply L(s + s0, nu^{(l-1)/2} rho, sigma) over the
// cuspidal factors sigma of Sigma_k(rho'). All three agree.
RationalFunction l_steinberg_pair(const LFactorSpec& spec);

// Poles c_i = q^{-(s0' + (l-k+2i)/2) d}, i = 0..k-1, of the factor as a
// function of Y = X^d, where s0' = spec.total_shift(). Empty when the
// factor is 1.
std::vector<BaseScalar> steinberg_poles(const LFactorSpec& spec);

struct PartialFractionTerm {
  BaseScalar pole;         // c_i
  BaseScalar coefficient;  // lambda_i
  friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

// sum_i lambda_i / (1 - c_i Y) with Y = X^d.
struct PartialFraction {
  int d = 1;
  std::vector<PartialFractionTerm> terms;
};

// Simple-pole decomposition of prod_i 1/(1 - c_i Y):
// lambda_i = prod_{j != i} 1/(1 - c_j/c_i). Throws PreconditionError on a
// repeated or zero pole.
PartialFraction partial_fractions(const std::vector<BaseScalar>& poles, int d);
// Throws DomainError when the factor is 1 (nothing to decompose).
PartialFraction partial_fractions(const LFactorSpec& spec);

// sum_i lambda_i / (1 - c_i X^d) over a common denominator.
RationalFunction recombine(const PartialFraction& pf);

}  // namespace rsl

#endif  // RSL_LFACTOR_LFACTOR_HPP
