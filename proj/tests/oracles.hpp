// Reference computations shared by the unit tests and the acceptance binary.
// Deliberately naive: no dominance-first enumeration, no rational-function
// arithmetic.
#ifndef RSL_TESTS_ORACLES_HPP
#define RSL_TESTS_ORACLES_HPP

#include <cstddef>
#include <vector>

#include "rsl/core/base_scalar.hpp"
#include "rsl/core/truncated_series.hpp"
#include "rsl/rs_integral/integral.hpp"

namespace rsl::oracle {

// 1 + cX + c^2X^2 + ...
inline TruncatedSeries geometric(const BaseScalar& c, std::size_t order, int d = 1) {
  std::vector<BaseScalar> coeffs(order + 1);
  BaseScalar p(1);
  for (std::size_t i = 0; i <= order; i += static_cast<std::size_t>(d)) {
    coeffs[i] = p;
    p *= c;
  }
  return TruncatedSeries(order, std::move(coeffs));
}

inline TruncatedSeries product_of_geometrics(const std::vector<BaseScalar>& poles, std::size_t order, int d = 1) {
  TruncatedSeries out = geometric(BaseScalar(), order);  // 1
  for (const auto& c : poles) out = out * geometric(c, order, d);
  return out;
}

// prod_{i,j} 1/(1 - alpha_i beta_j X)
inline TruncatedSeries cauchy(const std::vector<BaseScalar>& alpha, const std::vector<BaseScalar>& beta,
                              std::size_t order) {
  std::vector<BaseScalar> poles;
  for (const auto& a : alpha)
    for (const auto& b : beta) poles.push_back(a * b);
  return product_of_geometrics(poles, order);
}

// delta_B(w^lambda)^{-1} = prod_{i<j} |w^{lambda_i - lambda_j}|^{-1} = q^{sum_{i<j} (lambda_i - lambda_j)}
inline BaseScalar inverse_modulus(const std::vector<int>& lambda) {
  int e = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j) e += lambda[i] - lambda[j];
  return BaseScalar::u_power(2 * e);
}

struct BoxSum {
  TruncatedSeries series{0};
  bool negative_degree_terms = false;  // a nonzero term with |lambda| < 0
};

// Sums the integrand over every lambda in [low, depth]^len, applying only
// the support that phi itself imposes; W, W' are evaluated as given.
inline BoxSum box_series(const IntegralSpec& spec, int low = -2) {
  const bool reduced = spec.n == spec.m && std::holds_alternative<TestVectorShape>(*spec.phi);
  const int len = reduced ? spec.n - 1 : spec.m;
  BoxSum out;
  std::vector<BaseScalar> coeffs(static_cast<std::size_t>(spec.depth) + 1);
  std::vector<int> lambda(len, low);
  for (;;) {
    int total = 0;
    for (int x : lambda) total += x;
    bool supported = true;
    if (spec.n == spec.m && !reduced && lambda.back() < 0) supported = false;  // phi = 1_{o^n} on the last row
    if (supported && total <= spec.depth) {
      std::vector<int> big = lambda;
      big.resize(spec.n, 0);
      BaseScalar term = spec.w(Cocharacter(big));
      if (!term.is_zero()) {
        std::vector<int> small = lambda;
        if (reduced) small.resize(spec.n, 0);
        term *= spec.w_prime(Cocharacter(small));
        term *= inverse_modulus(lambda);
        const int shift = reduced ? 2 * total : total * (spec.n - spec.m);
        term *= BaseScalar::u_power(shift);
        if (!term.is_zero()) {
          if (total < 0) out.negative_degree_terms = true;
          else coeffs[total] += term;
        }
      }
    }
    int pos = 0;
    while (pos < len && lambda[pos] == spec.depth) lambda[pos++] = low;
    if (pos == len) break;
    ++lambda[pos];
  }
  out.series = TruncatedSeries(spec.depth, std::move(coeffs));
  return out;
}

}  // namespace rsl::oracle

#endif  // RSL_TESTS_ORACLES_HPP
