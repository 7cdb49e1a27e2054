#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "rsl/errors.hpp"
#include "rsl/lfactor/lfactor.hpp"
#include "rsl/rs_integral/integral.hpp"

namespace rsl {
namespace {

BaseScalar q_pow(int twice) { return BaseScalar::q_power(HalfInt::from_twice(twice)); }

IntegralSpec hecke(TorusFunction w, TorusFunction wp, int depth) {
  const int n = w.size();
  const int m = wp.size();
  return IntegralSpec{n, m, std::move(w), std::move(wp), std::nullopt, depth};
}

IntegralSpec equal(TorusFunction w, TorusFunction wp, SchwartzShape phi, int depth) {
  const int n = w.size();
  return IntegralSpec{n, n, std::move(w), std::move(wp), phi, depth};
}

TEST(HeckeSeries, Examples) {
  const auto s1 = hecke_series(hecke(EssentialSteinberg{2}, TorusFunction::spherical_sigma(1), 12));
  EXPECT_EQ(s1, oracle::geometric(q_pow(-1), 12));
  EXPECT_EQ(expand(l_steinberg_pair(LFactorSpec::family(2, 1, 1)), 12), s1);

  const auto s2 = hecke_series(hecke(TorusFunction::spherical_sigma(3), UnramifiedCharacter{HalfInt::from_int(1)}, 10));
  EXPECT_EQ(s2, oracle::product_of_geometrics({BaseScalar(1), q_pow(-2), q_pow(-4)}, 10));

  const auto s0 = hecke_series(hecke(EssentialSteinberg{4}, TorusFunction::spherical_sigma(2), 0));
  EXPECT_EQ(s0.order(), 0u);
  EXPECT_EQ(s0[0], BaseScalar(1));
}

TEST(EqualSizeSeries, Examples) {
  const auto reduced = equal_size_series(equal(EssentialSteinberg{2}, TorusFunction::spherical_sigma(2), TestVectorShape{}, 12));
  for (int v = 0; v <= 12; ++v) {
    BaseScalar want;
    for (int j = 0; j <= v; ++j) want += q_pow(-2 * j);
    EXPECT_EQ(reduced[v], want);
  }
  EXPECT_EQ(expand(l_steinberg_pair(LFactorSpec::family(2, 2, 1)), 12), reduced);

  const auto alpha = SatakeParams::sigma(2);
  const auto full = equal_size_series(equal(Spherical{alpha}, Spherical{alpha}, FullLattice{}, 10));
  EXPECT_EQ(full, oracle::cauchy(alpha.alphas(), alpha.alphas(), 10));

  const auto tate = equal_size_series(equal(TorusFunction::trivial(), TorusFunction::trivial(), FullLattice{}, 10));
  EXPECT_EQ(tate, oracle::geometric(BaseScalar(1), 10));
}

TEST(EqualSizeSeries, ScaleAndConductorDropOut) {
  const auto base = equal_size_series(equal(EssentialSteinberg{3}, TorusFunction::spherical_sigma(3), TestVectorShape{}, 8));
  const auto other =
      equal_size_series(equal(EssentialSteinberg{3}, TorusFunction::spherical_sigma(3), TestVectorShape{4, q_pow(5)}, 8));
  EXPECT_EQ(base, other);
}

TEST(IntegralSpec, Validation) {
  EXPECT_THROW(hecke_series(equal(TorusFunction::trivial(), TorusFunction::trivial(), FullLattice{}, 3)),
               PreconditionError);
  EXPECT_THROW(equal_size_series(hecke(EssentialSteinberg{2}, TorusFunction::trivial(), 3)), PreconditionError);
  IntegralSpec no_phi{2, 2, EssentialSteinberg{2}, TorusFunction::spherical_sigma(2), std::nullopt, 3};
  EXPECT_THROW(integral_series(no_phi), PreconditionError);
  IntegralSpec extra_phi{2, 1, EssentialSteinberg{2}, TorusFunction::trivial(), FullLattice{}, 3};
  EXPECT_THROW(integral_series(extra_phi), PreconditionError);
  IntegralSpec wrong_size{3, 1, EssentialSteinberg{2}, TorusFunction::trivial(), std::nullopt, 3};
  EXPECT_THROW(integral_series(wrong_size), PreconditionError);
  IntegralSpec tv1{1, 1, TorusFunction::trivial(), TorusFunction::trivial(), TestVectorShape{}, 3};
  EXPECT_THROW(integral_series(tv1), PreconditionError);
}

TEST(VerifyIdentity, SteinbergInstances) {
  const auto distinct = steinberg_distinct_case(3, 2, 24);
  const auto v1 = verify_identity(distinct.spec, distinct.closed);
  EXPECT_TRUE(v1.equal);
  EXPECT_EQ(v1.depth, 24);
  // Closed form against the naive product, not just the library L-factor.
  EXPECT_EQ(v1.computed, oracle::product_of_geometrics({q_pow(-1), q_pow(-3)}, 24));

  const auto eq = steinberg_equal_case(3, 24);
  const auto v2 = verify_identity(eq.spec, eq.closed);
  EXPECT_TRUE(v2.equal);
  EXPECT_EQ(v2.computed, oracle::product_of_geometrics({BaseScalar(1), q_pow(-2), q_pow(-4)}, 24));
}

TEST(VerifyIdentity, NegativeControl) {
  const auto tate = tate_case(10);
  const auto bad = verify_identity(tate.spec, RationalFunction::geometric(BaseScalar::q()));
  EXPECT_FALSE(bad.equal);
  ASSERT_TRUE(bad.first_mismatch.has_value());
  EXPECT_EQ(*bad.first_mismatch, 1u);
  EXPECT_TRUE(verify_identity(tate.spec, tate.closed).equal);
}

TEST(VerifyIdentity, DistinctSteinbergGrid) {
  for (int l = 2; l <= 5; ++l) {
    for (int k = 1; k < l; ++k) {
      const auto c = steinberg_distinct_case(l, k, 12);
      std::vector<BaseScalar> poles;
      for (int i = 1; i <= k; ++i) poles.push_back(q_pow(k + 1 - 2 * i - (l - 1)));
      EXPECT_EQ(integral_series(c.spec), oracle::product_of_geometrics(poles, 12)) << c.name;
      EXPECT_TRUE(verify_identity(c.spec, c.closed).equal) << c.name;
    }
  }
}

TEST(VerifyIdentity, EqualSteinbergGrid) {
  for (int l = 2; l <= 5; ++l) {
    const auto c = steinberg_equal_case(l, 12);
    std::vector<BaseScalar> poles;
    for (int i = 1; i <= l; ++i) poles.push_back(q_pow(l + 1 - 2 * i - (l - 1)));
    EXPECT_EQ(integral_series(c.spec), oracle::product_of_geometrics(poles, 12)) << c.name;
    EXPECT_TRUE(verify_identity(c.spec, c.closed).equal) << c.name;
  }
}

// prod_i L(s, nu^{1/2}, nu^{(l+1-2i)/2}) is a tempting misreading of the equal
// Steinberg factor; it coincides with the integral only at l = 2.
TEST(VerifyIdentity, HalfTwistVariantOnlyFitsLTwo) {
  for (int l = 2; l <= 4; ++l) {
    const auto c = steinberg_equal_case(l, 10);
    RationalFunction literal = RationalFunction::one();
    for (int i = 1; i <= l; ++i) literal = literal * RationalFunction::geometric(q_pow(-(1 + l + 1 - 2 * i)));
    EXPECT_EQ(verify_identity(c.spec, literal).equal, l == 2) << l;
  }
}

TEST(Cauchy, SphericalTimesSpherical) {
  for (int n : {2, 3}) {
    const auto c = spherical_cauchy_case(n, 16);
    const auto alpha = SatakeParams::sigma(n);
    const auto beta = SatakeParams::sigma(n, HalfInt::from_twice(1));
    const auto series = integral_series(c.spec);
    EXPECT_EQ(series, oracle::cauchy(alpha.alphas(), beta.alphas(), 16)) << n;
    EXPECT_TRUE(verify_identity(c.spec, c.closed).equal);
  }
}

TEST(Cauchy, UnequalSizesWithGenericParameters) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-3, 3);
  std::uniform_int_distribution<int> c(1, 3);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 2;
    const int m = 1 + trial % n;
    if (m >= n) continue;
    std::vector<BaseScalar> a, b;
    for (int i = 0; i < n; ++i) a.push_back(q_pow(e(rng)) * BaseScalar(c(rng)));
    for (int j = 0; j < m; ++j) b.push_back(q_pow(e(rng)) * BaseScalar(c(rng)));
    const auto series = hecke_series(hecke(Spherical{SatakeParams(a)}, Spherical{SatakeParams(b)}, 7));
    EXPECT_EQ(series, oracle::cauchy(a, b, 7)) << trial;
  }
}

TEST(Enumeration, DominanceFirstMatchesBox) {
  std::vector<IntegralSpec> specs = {
      steinberg_distinct_case(3, 2, 6).spec,
      steinberg_distinct_case(4, 1, 6).spec,
      steinberg_equal_case(3, 6).spec,
      spherical_cauchy_case(2, 6).spec,
      spherical_cauchy_case(3, 5).spec,
      tate_case(6).spec,
      hecke(TorusFunction::spherical_sigma(3), TorusFunction::spherical_sigma(2, HalfInt::from_int(1)), 6),
      hecke(MirabolicLift{3, HalfInt::from_twice(-1)}, UnramifiedCharacter{HalfInt::from_int(1)}, 6),
      equal(EssentialSteinberg{3}, TorusFunction::spherical_sigma(3), FullLattice{}, 6),
  };
  for (const auto& spec : specs) {
    const auto box = oracle::box_series(spec);
    EXPECT_FALSE(box.negative_degree_terms);
    EXPECT_EQ(integral_series(spec), box.series) << spec.w.describe() << " x " << spec.w_prime.describe();
  }
}

TEST(Enumeration, MonotoneTruncation) {
  const auto base = steinberg_distinct_case(4, 2, 6).spec;
  const auto small = integral_series(base);
  for (int depth : {7, 10, 14}) {
    auto spec = base;
    spec.depth = depth;
    const auto big = integral_series(spec);
    EXPECT_EQ(big.truncated(6), small);
  }
}

TEST(Enumeration, WorkerCountDoesNotChangeResult) {
  for (auto c : {steinberg_equal_case(4, 14), spherical_cauchy_case(3, 10)}) {
    const auto serial = integral_series(c.spec);
    for (int jobs : {2, 3, 5}) {
      c.spec.jobs = jobs;
      EXPECT_EQ(integral_series(c.spec), serial) << c.name << " jobs=" << jobs;
    }
  }
}

// Each weight component is pinned: perturbing it breaks the identities.
TEST(MeasureConvention, MutationsBreakIdentities) {
  const std::vector<IntegralCase> cases = {steinberg_distinct_case(3, 2, 10), steinberg_distinct_case(4, 1, 10),
                                           steinberg_equal_case(3, 10)};
  for (const auto& c : cases) {
    ASSERT_TRUE(verify_identity(c.spec, c.closed).equal) << c.name;
    for (int which = 0; which < 4; ++which) {
      auto spec = c.spec;
      if (which == 0) spec.weights.inverse_modulus = false;
      if (which == 1) spec.weights.shift = false;
      if (which == 2) spec.weights.support_floor = 1;
      if (which == 3) spec.weights.support_floor = -1;
      const auto v = verify_identity(spec, c.closed);
      // For k = 1 the modulus of GL_1 is trivial, so that mutation is invisible.
      const bool invisible = which == 0 && spec.m == 1;
      // Essential vectors vanish below the floor, so lowering it is invisible too.
      const bool below_support = which == 3;
      EXPECT_EQ(v.equal, invisible || below_support) << c.name << " mutation " << which;
    }
  }
  // Lowering the floor does matter for spherical x spherical, where only phi cuts the sum.
  auto cauchy = spherical_cauchy_case(2, 6);
  cauchy.spec.weights.support_floor = -1;
  EXPECT_FALSE(verify_identity(cauchy.spec, cauchy.closed).equal);
}

TEST(KeyIdentity, Examples) {
  const auto a = eq_key_check(2, 2, 1);
  EXPECT_TRUE(a.rational_identity);
  EXPECT_TRUE(a.integrals_checked);
  EXPECT_TRUE(a.holds);
  const auto b = eq_key_check(4, 2, 3);
  EXPECT_TRUE(b.holds);
  EXPECT_FALSE(b.integrals_checked);
  EXPECT_TRUE(eq_key_check(3, 1, 1).holds);
  EXPECT_THROW(eq_key_check(1, 2, 1), PreconditionError);
}

TEST(KeyIdentity, Grid) {
  for (int l = 1; l <= 5; ++l)
    for (int k = 1; k <= l; ++k)
      for (int d = 1; d <= 3; ++d)
        for (int s2 : {0, 1, -2}) {
          const auto v = eq_key_check(l, k, d, HalfInt::from_twice(s2), 10);
          EXPECT_TRUE(v.holds) << l << " " << k << " " << d << " " << s2 << ": " << v.detail;
        }
}

}  // namespace
}  // namespace rsl
