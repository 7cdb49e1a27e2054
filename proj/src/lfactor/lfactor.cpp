#include "rsl/lfactor/lfactor.hpp"

#include <utility>

#include "rsl/errors.hpp"

namespace rsl {

LFactorSpec::LFactorSpec(RepDescriptor left, RepDescriptor right, HalfInt s0)
    : left_(std::move(left)), right_(std::move(right)), s0_(s0) {
  if (left_.kind() != RepKind::kSteinberg) {
    throw PreconditionError("left representation must be St_l(rho)");
  }
  if (right_.kind() == RepKind::kProduct) {
    throw PreconditionError("right representation must be St_k, Sigma_k or Sp_k");
  }
  if (!(l() >= k() && k() >= 1)) throw PreconditionError("need l >= k >= 1");
}

LFactorSpec LFactorSpec::family(int l, int k, int d, HalfInt s0, RepKind right_kind,
                                bool distinct_inertial) {
  if (l < 1 || k < 1 || d < 1) throw PreconditionError("l, k and d must be positive");
  const CuspidalDatum rho("rho", d, d);
  const CuspidalDatum rho_prime = distinct_inertial ? CuspidalDatum("tau", d, d, true) : rho.contragredient();
  RepDescriptor right = [&] {
    switch (right_kind) {
      case RepKind::kSteinberg: return RepDescriptor::steinberg(k, rho_prime);
      case RepKind::kSpeh: return RepDescriptor::speh(k, rho_prime);
      case RepKind::kStandardSigma: return RepDescriptor::sigma(k, rho_prime);
      case RepKind::kProduct: break;
    }
    throw PreconditionError("right representation must be St_k, Sigma_k or Sp_k");
  }();
  return LFactorSpec(RepDescriptor::steinberg(l, rho), std::move(right), s0);
}

bool LFactorSpec::dual_equivalent() const { return is_twist_of_dual(left_.datum(), right_.datum()); }

HalfInt LFactorSpec::total_shift() const {
  return s0_ + twist_offset_to_dual(left_.datum(), right_.datum());
}

RationalFunction l_cuspidal_pair(const CuspidalDatum& rho, const CuspidalDatum& rho_prime, HalfInt shift) {
  if (!is_twist_of_dual(rho, rho_prime)) return RationalFunction::one();
  const HalfInt c = shift + twist_offset_to_dual(rho, rho_prime);
  const int d = rho.torsion();
  return RationalFunction::geometric(BaseScalar::u_power(-c.twice() * d), d);
}

RationalFunction l_steinberg_pair(const LFactorSpec& spec) {
  if (!spec.dual_equivalent()) return RationalFunction::one();
  const int l = spec.l();
  const int k = spec.k();
  const CuspidalDatum top = spec.left().datum().twisted(HalfInt::from_twice(l - 1));
  RationalFunction out = RationalFunction::one();
  if (spec.right().kind() == RepKind::kSteinberg) {
    const CuspidalDatum rho_dual = spec.left().datum().contragredient();
    const HalfInt shift = spec.total_shift();
    for (int i = 1; i <= k; ++i) {
      out = out * l_cuspidal_pair(top, rho_dual.twisted(HalfInt::from_twice(k + 1 - 2 * i)), shift);
    }
    return out;
  }
  // Sigma_k(rho') and Sp_k(rho') share the standard module Sigma_k(rho').
  const RepDescriptor standard = RepDescriptor::sigma(k, spec.right().datum());
  for (const Segment& factor : standard.discrete_factors()) {
    out = out * l_cuspidal_pair(top, factor.datum().twisted(factor.a()), spec.s0());
  }
  return out;
}

std::vector<BaseScalar> steinberg_poles(const LFactorSpec& spec) {
  if (!spec.dual_equivalent()) return {};
  const int d = spec.d();
  const HalfInt shift = spec.total_shift();
  std::vector<BaseScalar> poles;
  for (int i = 0; i < spec.k(); ++i) {
    const HalfInt c = shift + HalfInt::from_twice(spec.l() - spec.k() + 2 * i);
    poles.push_back(BaseScalar::u_power(-c.twice() * d));
  }
  return poles;
}

PartialFraction partial_fractions(const std::vector<BaseScalar>& poles, int d) {
  if (d < 1) throw PreconditionError("d must be positive");
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (poles[i].is_zero()) throw PreconditionError("zero pole");
    for (std::size_t j = i + 1; j < poles.size(); ++j) {
      if (poles[i] == poles[j]) throw PreconditionError("repeated pole; only simple poles are supported");
    }
  }
  PartialFraction pf;
  pf.d = d;
  const BaseScalar one(1);
  for (std::size_t i = 0; i < poles.size(); ++i) {
    BaseScalar lambda(1);
    const BaseScalar inv = poles[i].inverse();
    for (std::size_t j = 0; j < poles.size(); ++j) {
      if (j != i) lambda *= one - poles[j] * inv;
    }
    pf.terms.push_back({poles[i], lambda.inverse()});
  }
  return pf;
}

PartialFraction partial_fractions(const LFactorSpec& spec) {
  if (!spec.dual_equivalent()) throw DomainError("the L-factor is 1; nothing to decompose");
  return partial_fractions(steinberg_poles(spec), spec.d());
}

RationalFunction recombine(const PartialFraction& pf) {
  XPoly den = XPoly::one();
  for (const auto& t : pf.terms) den = den * XPoly{BaseScalar(1), -t.pole};
  XPoly num;
  for (std::size_t i = 0; i < pf.terms.size(); ++i) {
    XPoly cofactor(pf.terms[i].coefficient);
    for (std::size_t j = 0; j < pf.terms.size(); ++j) {
      if (j != i) cofactor = cofactor * XPoly{BaseScalar(1), -pf.terms[j].pole};
    }
    num += cofactor;
  }
  return RationalFunction::normalize(num.substitute_power(pf.d), den.substitute_power(pf.d));
}

}  // namespace rsl
