#include "rsl/core/truncated_series.hpp"

#include <algorithm>

#include "rsl/errors.hpp"

namespace rsl {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BaseScalar> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw PreconditionError("truncation cannot widen a series");
  return TruncatedSeries(order, std::vector<BaseScalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const BaseScalar& c) const {
  TruncatedSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

SeriesComparison compare_series(const TruncatedSeries& a, const TruncatedSeries& b) {
  SeriesComparison result;
  result.compared_order = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= result.compared_order; ++i) {
    if (a[i] != b[i]) {
      result.equal = false;
      result.first_mismatch = i;
      break;
    }
  }
  return result;
}

TruncatedSeries expand(const RationalFunction& r, std::size_t order) {
  const XPoly& num = r.num();
  const XPoly& den = r.den();
  const BaseScalar d0 = den.coeff(0);
  if (d0.is_zero()) throw PreconditionError("denominator vanishes at X = 0; no power series expansion");
  const BaseScalar d0_inv = d0.inverse();
  const std::size_t deg = static_cast<std::size_t>(den.degree());
  TruncatedSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    BaseScalar acc = num.coeff(n);
    for (std::size_t j = 1; j <= std::min(n, deg); ++j) {
      const BaseScalar& dj = den.coeffs()[j];
      if (!dj.is_zero() && !out[n - j].is_zero()) acc -= dj * out[n - j];
    }
    out[n] = d0.is_one() ? acc : acc * d0_inv;
  }
  return out;
}

}  // namespace rsl
