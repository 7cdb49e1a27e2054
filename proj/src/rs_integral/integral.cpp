#include "rsl/rs_integral/integral.hpp"

#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "rsl/errors.hpp"
#include "rsl/lfactor/lfactor.hpp"

namespace rsl {

void IntegralSpec::validate() const {
  if (m < 1 || n < m) throw PreconditionError("need n >= m >= 1");
  if (w.size() != n) throw PreconditionError("W must live on GL_n");
  if (w_prime.size() != m) throw PreconditionError("W' must live on GL_m");
  if (n > m && phi) throw PreconditionError("a Schwartz function is only used when n == m");
  if (n == m && !phi) throw PreconditionError("n == m needs a Schwartz function");
  if (n == m && phi && std::holds_alternative<TestVectorShape>(*phi)) {
    if (n < 2) throw PreconditionError("the reduced TestVectorShape integral needs n >= 2");
    if (std::get<TestVectorShape>(*phi).f < 1) throw PreconditionError("TestVectorShape needs f >= 1");
  }
  if (depth < 0) throw PreconditionError("depth must be nonnegative");
  if (jobs < 1) throw PreconditionError("jobs must be positive");
}

namespace {

// Dominant lambda in Z^len with lambda_len >= floor and |lambda| == total.
std::vector<Cocharacter> dominant_slice(int len, int total, int floor) {
  const int rest = total - len * floor;
  if (rest < 0) return {};
  std::vector<Cocharacter> out;
  for (const auto& mu : dominant_of_size(len, rest)) out.push_back(mu.shifted(floor));
  return out;
}

BaseScalar inverse_modulus(const Cocharacter& lambda) { return modulus_sqrt(lambda).pow(-2); }

// Fills coefficient t of a depth-D series, slices t = j mod jobs per worker.
TruncatedSeries sliced(int depth, int jobs, const std::function<BaseScalar(int)>& coefficient) {
  std::vector<BaseScalar> coeffs(static_cast<std::size_t>(depth) + 1);
  if (jobs <= 1) {
    for (int t = 0; t <= depth; ++t) coeffs[t] = coefficient(t);
    return TruncatedSeries(depth, std::move(coeffs));
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      try {
        for (int t = j; t <= depth; t += jobs) coeffs[t] = coefficient(t);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return TruncatedSeries(depth, std::move(coeffs));
}

}  // namespace

TruncatedSeries hecke_series(const IntegralSpec& spec) {
  spec.validate();
  if (spec.n == spec.m) throw PreconditionError("hecke_series needs n > m");
  const auto& mc = spec.weights;
  return sliced(spec.depth, spec.jobs, [&](int t) {
    BaseScalar c;
    for (const auto& lambda : dominant_slice(spec.m, t, mc.support_floor)) {
      BaseScalar term = spec.w(lambda.padded(spec.n));
      if (term.is_zero()) continue;
      term *= spec.w_prime(lambda);
      if (mc.inverse_modulus) term *= inverse_modulus(lambda);
      c += term;
    }
    if (mc.shift) c *= BaseScalar::u_power(t * (spec.n - spec.m));
    return c;
  });
}

TruncatedSeries equal_size_series(const IntegralSpec& spec) {
  spec.validate();
  if (spec.n != spec.m) throw PreconditionError("equal_size_series needs n == m");
  const auto& mc = spec.weights;
  if (std::holds_alternative<FullLattice>(*spec.phi)) {
    return sliced(spec.depth, spec.jobs, [&](int t) {
      BaseScalar c;
      for (const auto& lambda : dominant_slice(spec.n, t, mc.support_floor)) {
        BaseScalar term = spec.w(lambda);
        if (term.is_zero()) continue;
        term *= spec.w_prime(lambda);
        if (mc.inverse_modulus) term *= inverse_modulus(lambda);
        c += term;
      }
      return c;
    });
  }
  // Reduced integral over N_{n-1} \ GL_{n-1} against nu^{s-1}.
  return sliced(spec.depth, spec.jobs, [&](int t) {
    BaseScalar c;
    for (const auto& mu : dominant_slice(spec.n - 1, t, mc.support_floor)) {
      const Cocharacter g = mu.padded(spec.n);
      BaseScalar term = spec.w(g);
      if (term.is_zero()) continue;
      term *= spec.w_prime(g);
      if (mc.inverse_modulus) term *= inverse_modulus(mu);
      c += term;
    }
    if (mc.shift) c *= BaseScalar::u_power(2 * t);
    return c;
  });
}

TruncatedSeries integral_series(const IntegralSpec& spec) {
  return spec.n > spec.m ? hecke_series(spec) : equal_size_series(spec);
}

Verdict verify_identity(const IntegralSpec& spec, const RationalFunction& closed) {
  Verdict v;
  v.depth = spec.depth;
  v.computed = integral_series(spec);
  v.expected = expand(closed, static_cast<std::size_t>(spec.depth));
  const auto cmp = compare_series(v.computed, v.expected);
  v.equal = cmp.equal;
  v.first_mismatch = cmp.first_mismatch;
  return v;
}

KeyVerdict eq_key_check(int l, int k, int d, HalfInt s0, int depth) {
  const auto spec = LFactorSpec::family(l, k, d, s0);
  const auto pf = partial_fractions(spec);
  const CuspidalDatum rho = spec.left().datum();
  const CuspidalDatum top = rho.twisted(HalfInt::from_twice(l - 1));

  KeyVerdict out;
  RationalFunction sum;
  std::vector<RationalFunction> summands;
  for (int i = 0; i < k; ++i) {
    summands.push_back(l_cuspidal_pair(top, rho.contragredient().twisted(HalfInt::from_twice(1 - k + 2 * i)), s0));
    sum = sum + summands.back().scaled(pf.terms[i].coefficient);
  }
  out.rational_identity = sum == l_steinberg_pair(spec);
  if (!out.rational_identity) out.detail = "partial-fraction sum differs from L(St_l, St_k)";

  if (d == 1) {
    out.integrals_checked = true;
    const HalfInt left_exponent = HalfInt::from_twice(l - 1);
    for (int i = 0; i < k && out.integrals_match; ++i) {
      const HalfInt e = s0 + HalfInt::from_twice(1 - k + 2 * i);
      IntegralSpec is = k == 1 ? IntegralSpec{1, 1, UnramifiedCharacter{e}, UnramifiedCharacter{left_exponent}, FullLattice{}, depth}
                               : IntegralSpec{k, 1, MirabolicLift{k, e}, UnramifiedCharacter{left_exponent}, std::nullopt, depth};
      const auto v = verify_identity(is, summands[i]);
      if (!v.equal) {
        out.integrals_match = false;
        out.failing_summand = i;
        out.first_mismatch = v.first_mismatch;
        out.detail = "torus sum for summand " + std::to_string(i) + " differs from its L-factor";
      }
    }
  }
  out.holds = out.rational_identity && out.integrals_match;
  return out;
}

IntegralCase steinberg_distinct_case(int l, int k, int depth) {
  if (!(1 <= k && k < l)) throw PreconditionError("steinberg-distinct needs 1 <= k < l");
  return {"steinberg-distinct(l=" + std::to_string(l) + ",k=" + std::to_string(k) + ")",
          IntegralSpec{l, k, EssentialSteinberg{l}, TorusFunction::spherical_sigma(k), std::nullopt, depth},
          l_steinberg_pair(LFactorSpec::family(l, k, 1))};
}

IntegralCase steinberg_equal_case(int l, int depth) {
  if (l < 2) throw PreconditionError("steinberg-equal needs l >= 2");
  return {"steinberg-equal(l=" + std::to_string(l) + ")",
          IntegralSpec{l, l, EssentialSteinberg{l}, TorusFunction::spherical_sigma(l), TestVectorShape{}, depth},
          l_steinberg_pair(LFactorSpec::family(l, l, 1))};
}

IntegralCase spherical_cauchy_case(int n, int depth) {
  if (n < 1) throw PreconditionError("spherical-cauchy needs n >= 1");
  const auto alpha = SatakeParams::sigma(n);
  const auto beta = SatakeParams::sigma(n, HalfInt::from_twice(1));
  RationalFunction closed = RationalFunction::one();
  for (const auto& a : alpha.alphas()) {
    for (const auto& b : beta.alphas()) closed = closed * RationalFunction::geometric(a * b);
  }
  return {"spherical-cauchy(n=" + std::to_string(n) + ")",
          IntegralSpec{n, n, Spherical{alpha}, Spherical{beta}, FullLattice{}, depth}, closed};
}

IntegralCase tate_case(int depth) {
  return {"tate", IntegralSpec{1, 1, TorusFunction::trivial(), TorusFunction::trivial(), FullLattice{}, depth},
          RationalFunction::geometric(BaseScalar(1))};
}

}  // namespace rsl
