#ifndef RSL_CORE_TRUNCATED_SERIES_HPP
#define RSL_CORE_TRUNCATED_SERIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rsl/core/base_scalar.hpp"
#include "rsl/core/rational_function.hpp"

namespace rsl {

// Power series in X known up to and including X^order. Binary operations
// truncate to the smaller order; the order is never widened.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(std::size_t order, std::vector<BaseScalar> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BaseScalar& operator[](std::size_t i) const { return coeffs_.at(i); }
  BaseScalar& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<BaseScalar>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const BaseScalar& c) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BaseScalar> coeffs_;
};

struct SeriesComparison {
  bool equal = true;
  std::optional<std::size_t> first_mismatch;
  std::size_t compared_order = 0;
};

// series_eq: compares coefficients up to min(order(a), order(b)).
SeriesComparison compare_series(const TruncatedSeries& a, const TruncatedSeries& b);

// rf_expand. Throws PreconditionError when den(0) = 0.
TruncatedSeries expand(const RationalFunction& r, std::size_t order);

}  // namespace rsl

#endif  // RSL_CORE_TRUNCATED_SERIES_HPP
