#include "rsl/whittaker/schur.hpp"

#include <unordered_map>
#include <utility>

#include "rsl/errors.hpp"

namespace rsl {

SatakeParams::SatakeParams(std::vector<BaseScalar> alphas) : alphas_(std::move(alphas)) {
  for (const auto& a : alphas_) {
    if (a.is_zero()) throw DomainError("Satake parameters must be nonzero");
  }
}

SatakeParams SatakeParams::sigma(int k, HalfInt twist) {
  if (k < 1) throw PreconditionError("Sigma_k needs k >= 1");
  std::vector<BaseScalar> out;
  for (int i = 1; i <= k; ++i) out.push_back(BaseScalar::u_power(k + 1 - 2 * i - twist.twice()));
  return SatakeParams(std::move(out));
}

BaseScalar SatakeParams::product() const {
  BaseScalar p(1);
  for (const auto& a : alphas_) p *= a;
  return p;
}

namespace {

BaseScalar laplace(const std::vector<std::vector<BaseScalar>>& m, std::size_t row, unsigned used,
                   std::unordered_map<unsigned, BaseScalar>& memo) {
  const std::size_t n = m.size();
  if (row == n) return BaseScalar(1);
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  BaseScalar total;
  int free_before = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (used & (1u << j)) continue;
    if (!m[row][j].is_zero()) {
      BaseScalar term = m[row][j] * laplace(m, row + 1, used | (1u << j), memo);
      if (free_before % 2) total -= term;
      else total += term;
    }
    ++free_before;
  }
  memo.emplace(used, total);
  return total;
}

void check_lengths(const SatakeParams& alphas, const Cocharacter& lambda) {
  if (alphas.size() != lambda.size()) throw PreconditionError("cocharacter length does not match the parameters");
  if (!lambda.is_dominant()) throw PreconditionError("schur needs a dominant cocharacter");
}

}  // namespace

BaseScalar determinant(const std::vector<std::vector<BaseScalar>>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw PreconditionError("determinant of a non-square matrix");
  }
  if (m.size() > 24) throw PreconditionError("matrix too large");
  std::unordered_map<unsigned, BaseScalar> memo;
  return laplace(m, 0, 0u, memo);
}

std::vector<BaseScalar> complete_homogeneous(const SatakeParams& alphas, int max_degree) {
  // h_m(a_1..a_j) = h_m(a_1..a_{j-1}) + a_j h_{m-1}(a_1..a_j)
  std::vector<BaseScalar> h(max_degree + 1);
  h[0] = BaseScalar(1);
  for (const auto& a : alphas.alphas()) {
    for (int m = 1; m <= max_degree; ++m) h[m] += a * h[m - 1];
  }
  return h;
}

BaseScalar schur(const SatakeParams& alphas, const Cocharacter& lambda) {
  check_lengths(alphas, lambda);
  const int n = lambda.size();
  const int low = lambda[n - 1];
  const Cocharacter mu = lambda.shifted(-low);
  const auto h = complete_homogeneous(alphas, mu.size() ? mu[0] + n : 0);
  std::vector<std::vector<BaseScalar>> m(n, std::vector<BaseScalar>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int idx = mu[i] - i + j;
      if (idx >= 0) m[i][j] = h[idx];
    }
  }
  return alphas.product().pow(low) * determinant(m);
}

BaseScalar schur_bialternant(const SatakeParams& alphas, const Cocharacter& lambda) {
  check_lengths(alphas, lambda);
  const int n = lambda.size();
  const int low = lambda[n - 1];
  const Cocharacter mu = lambda.shifted(-low);
  std::vector<std::vector<BaseScalar>> top(n, std::vector<BaseScalar>(n));
  std::vector<std::vector<BaseScalar>> vandermonde(n, std::vector<BaseScalar>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      top[i][j] = alphas[i].pow(mu[j] + n - 1 - j);
      vandermonde[i][j] = alphas[i].pow(n - 1 - j);
    }
  }
  const BaseScalar v = determinant(vandermonde);
  if (v.is_zero()) throw DomainError("bialternant needs distinct Satake parameters");
  return alphas.product().pow(low) * determinant(top) / v;
}

BaseScalar modulus_sqrt(const Cocharacter& lambda) {
  const int n = lambda.size();
  int twice = 0;
  for (int i = 1; i <= n; ++i) twice -= (n + 1 - 2 * i) * lambda[i - 1];
  return BaseScalar::u_power(twice);
}

}  // namespace rsl
