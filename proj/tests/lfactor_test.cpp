#include <vector>

#include "gtest/gtest.h"

#include "rsl/core/truncated_series.hpp"
#include "rsl/errors.hpp"
#include "rsl/lfactor/lfactor.hpp"

namespace rsl {
namespace {

BaseScalar q_pow(int twice) { return BaseScalar::q_power(HalfInt::from_twice(twice)); }
const BaseScalar kQ = BaseScalar::q();

RationalFunction inverse_of(const XPoly& den) { return RationalFunction::normalize(XPoly::one(), den); }

// Complete homogeneous h_n(c) by enumerating exponent vectors.
BaseScalar complete_homogeneous(const std::vector<BaseScalar>& c, int n, std::size_t from = 0) {
  if (from == c.size()) return BaseScalar(n == 0 ? 1 : 0);
  BaseScalar total;
  BaseScalar power(1);
  for (int a = 0; a <= n; ++a) {
    total += power * complete_homogeneous(c, n - a, from + 1);
    power *= c[from];
  }
  return total;
}

// Pole list read straight off prod_{i=0}^{k-1} 1/(1 - q^{-(s0 + (l-k+2i)/2) d} Y).
std::vector<BaseScalar> oracle_poles(int l, int k, int d, HalfInt s0) {
  std::vector<BaseScalar> out;
  for (int i = 0; i < k; ++i) out.push_back(q_pow(-(s0.twice() + l - k + 2 * i) * d));
  return out;
}

struct GridPoint {
  int l, k, d;
  HalfInt s0;
};

std::vector<GridPoint> grid() {
  std::vector<GridPoint> out;
  for (int l = 1; l <= 6; ++l)
    for (int k = 1; k <= l; ++k)
      for (int d = 1; d <= 3; ++d)
        for (int s2 : {0, 1, -1, 2, -2}) out.push_back({l, k, d, HalfInt::from_twice(s2)});
  return out;
}

TEST(LCuspidalPair, Examples) {
  const CuspidalDatum triv("rho", 1, 1);
  EXPECT_EQ(l_cuspidal_pair(triv, triv.contragredient()), inverse_of(XPoly{1, -1}));
  EXPECT_EQ(l_cuspidal_pair(triv, CuspidalDatum("tau", 1, 1)), RationalFunction::one());
  EXPECT_EQ(l_cuspidal_pair(triv, triv), RationalFunction::one());  // self-dual needs an explicit dual flag
  const CuspidalDatum rho2("rho", 2, 2);
  EXPECT_EQ(l_cuspidal_pair(rho2, rho2.contragredient()), inverse_of(XPoly{1, 0, -1}));
}

TEST(LCuspidalPair, ShiftAndDataTwistsAdd) {
  const CuspidalDatum rho("rho", 2, 2);
  const HalfInt half = HalfInt::from_twice(1);
  // c = 1/2 (shift) + 1 (rho' = nu^1 rho^vee): pole q^{-3/2 * 2} = q^{-3}.
  const auto lhs = l_cuspidal_pair(rho, rho.contragredient().twisted(HalfInt::from_int(1)), half);
  EXPECT_EQ(lhs, inverse_of(XPoly{1, 0, -q_pow(-6)}));
  // Twisting both sides oppositely leaves the pair unchanged.
  EXPECT_EQ(l_cuspidal_pair(rho.twisted(half), rho.contragredient().twisted(-half)),
            l_cuspidal_pair(rho, rho.contragredient()));
}

TEST(LSteinbergPair, Examples) {
  EXPECT_EQ(l_steinberg_pair(LFactorSpec::family(2, 2, 1)), inverse_of(XPoly{1, -1} * XPoly{1, -q_pow(-2)}));
  EXPECT_EQ(l_steinberg_pair(LFactorSpec::family(3, 1, 1)), inverse_of(XPoly{1, -q_pow(-2)}));
  EXPECT_EQ(l_steinberg_pair(LFactorSpec::family(3, 2, 1, {}, RepKind::kSteinberg, true)), RationalFunction::one());
}

TEST(LSteinbergPair, RejectsBadSpecs) {
  EXPECT_THROW(LFactorSpec::family(1, 2, 1), PreconditionError);
  EXPECT_THROW(LFactorSpec::family(2, 0, 1), PreconditionError);
  const CuspidalDatum rho("rho", 1, 1);
  EXPECT_THROW(LFactorSpec(RepDescriptor::sigma(2, rho), RepDescriptor::steinberg(1, rho)), PreconditionError);
  EXPECT_THROW(LFactorSpec(RepDescriptor::steinberg(2, rho),
                           RepDescriptor::product({Segment(rho, HalfInt{}, HalfInt{})})),
               PreconditionError);
}

TEST(LSteinbergPair, ThreeWayEqualityOverGrid) {
  for (const auto& g : grid()) {
    const auto st = l_steinberg_pair(LFactorSpec::family(g.l, g.k, g.d, g.s0, RepKind::kSteinberg));
    const auto sigma = l_steinberg_pair(LFactorSpec::family(g.l, g.k, g.d, g.s0, RepKind::kStandardSigma));
    const auto sp = l_steinberg_pair(LFactorSpec::family(g.l, g.k, g.d, g.s0, RepKind::kSpeh));
    EXPECT_EQ(st, sigma) << g.l << " " << g.k << " " << g.d;
    EXPECT_EQ(st, sp) << g.l << " " << g.k << " " << g.d;
  }
}

TEST(LSteinbergPair, ShapeAndSeriesMatchOracle) {
  for (const auto& g : grid()) {
    const auto spec = LFactorSpec::family(g.l, g.k, g.d, g.s0);
    const auto rf = l_steinberg_pair(spec);
    EXPECT_EQ(rf.num(), XPoly::one());
    EXPECT_EQ(rf.den().degree(), g.k * g.d);
    if (g.l > 4) continue;
    const auto poles = oracle_poles(g.l, g.k, g.d, g.s0);
    const int depth = 9;
    const auto series = expand(rf, depth);
    for (int n = 0; n <= depth; ++n) {
      const BaseScalar want = n % g.d == 0 ? complete_homogeneous(poles, n / g.d) : BaseScalar();
      ASSERT_EQ(series[n], want) << g.l << " " << g.k << " " << g.d << " n=" << n;
    }
  }
}

TEST(LSteinbergPair, RightTwistActsLikeS0) {
  const CuspidalDatum rho("rho", 2, 2);
  const HalfInt t = HalfInt::from_twice(3);
  const LFactorSpec twisted(RepDescriptor::steinberg(3, rho), RepDescriptor::sigma(2, rho.contragredient().twisted(t)));
  EXPECT_EQ(twisted.total_shift(), t);
  EXPECT_EQ(l_steinberg_pair(twisted), l_steinberg_pair(LFactorSpec::family(3, 2, 2, t)));
}

TEST(PartialFractions, Examples) {
  const auto pf = partial_fractions(LFactorSpec::family(2, 2, 1));
  ASSERT_EQ(pf.terms.size(), 2u);
  EXPECT_EQ(pf.terms[0].pole, BaseScalar(1));
  EXPECT_EQ(pf.terms[1].pole, q_pow(-2));
  EXPECT_EQ(pf.terms[0].coefficient, kQ / (kQ - BaseScalar(1)));
  EXPECT_EQ(pf.terms[1].coefficient, -BaseScalar(1) / (kQ - BaseScalar(1)));

  const auto single = partial_fractions(LFactorSpec::family(4, 1, 2));
  ASSERT_EQ(single.terms.size(), 1u);
  EXPECT_EQ(single.terms[0].coefficient, BaseScalar(1));

  EXPECT_EQ(recombine(PartialFraction{1, {{BaseScalar(1), BaseScalar(1)}}}), inverse_of(XPoly{1, -1}));
}

TEST(PartialFractions, Guards) {
  EXPECT_THROW(partial_fractions({kQ, kQ}, 1), PreconditionError);
  EXPECT_THROW(partial_fractions({BaseScalar()}, 1), PreconditionError);
  EXPECT_THROW(partial_fractions(LFactorSpec::family(2, 1, 1, {}, RepKind::kSteinberg, true)), DomainError);
}

TEST(PartialFractions, RecombinesAndSumsToOneOverGrid) {
  for (const auto& g : grid()) {
    const auto spec = LFactorSpec::family(g.l, g.k, g.d, g.s0);
    const auto pf = partial_fractions(spec);
    ASSERT_EQ(static_cast<int>(pf.terms.size()), g.k);
    BaseScalar sum;
    for (const auto& t : pf.terms) sum += t.coefficient;
    EXPECT_EQ(sum, BaseScalar(1));
    EXPECT_EQ(recombine(pf), l_steinberg_pair(spec)) << g.l << " " << g.k << " " << g.d;
  }
}

TEST(PartialFractions, PowerSumsGiveCompleteHomogeneous) {
  // sum_i lambda_i c_i^n = h_n(c): coefficientwise form of the decomposition.
  for (int k = 1; k <= 4; ++k) {
    const auto spec = LFactorSpec::family(5, k, 1, HalfInt::from_twice(1));
    const auto pf = partial_fractions(spec);
    std::vector<BaseScalar> poles;
    for (const auto& t : pf.terms) poles.push_back(t.pole);
    for (int n = 0; n <= 6; ++n) {
      BaseScalar lhs;
      for (const auto& t : pf.terms) lhs += t.coefficient * t.pole.pow(n);
      EXPECT_EQ(lhs, complete_homogeneous(poles, n));
    }
  }
}

TEST(PartialFractions, TwistCovariance) {
  for (int d = 1; d <= 3; ++d) {
    for (int t2 : {1, -1, 2, -3}) {
      const HalfInt t = HalfInt::from_twice(t2);
      const auto base = partial_fractions(LFactorSpec::family(5, 3, d));
      const auto moved = partial_fractions(LFactorSpec::family(5, 3, d, t));
      ASSERT_EQ(base.terms.size(), moved.terms.size());
      for (std::size_t i = 0; i < base.terms.size(); ++i) {
        EXPECT_EQ(moved.terms[i].pole, base.terms[i].pole * q_pow(-t2 * d));
        EXPECT_EQ(moved.terms[i].coefficient, base.terms[i].coefficient);
      }
    }
  }
}

}  // namespace
}  // namespace rsl
