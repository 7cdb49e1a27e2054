#include "rsl/segments/descriptor.hpp"

#include <algorithm>
#include <utility>

#include "rsl/errors.hpp"

namespace rsl {

std::string_view kind_name(RepKind kind) {
  switch (kind) {
    case RepKind::kSteinberg: return "St";
    case RepKind::kSpeh: return "Sp";
    case RepKind::kStandardSigma: return "Sigma";
    case RepKind::kProduct: return "Product";
  }
  return "?";
}

RepDescriptor::RepDescriptor(RepKind kind, std::vector<Segment> segments)
    : kind_(kind), segments_(std::move(segments)) {
  if (segments_.empty()) throw PreconditionError("a representation needs at least one segment");
}

RepDescriptor RepDescriptor::steinberg(int k, const CuspidalDatum& rho) {
  return RepDescriptor(RepKind::kSteinberg, {Segment::centered(rho, k)});
}

RepDescriptor RepDescriptor::speh(int k, const CuspidalDatum& rho) {
  return RepDescriptor(RepKind::kSpeh, {Segment::centered(rho, k)});
}

RepDescriptor RepDescriptor::sigma(int k, const CuspidalDatum& rho) {
  return RepDescriptor(RepKind::kStandardSigma, {Segment::centered(rho, k)});
}

RepDescriptor RepDescriptor::product(std::vector<Segment> segments) {
  return RepDescriptor(RepKind::kProduct, std::move(segments));
}

int RepDescriptor::k() const {
  if (kind_ == RepKind::kProduct) throw DomainError("k is undefined for a general product");
  return segments_.front().length();
}

int RepDescriptor::group_size() const {
  int n = 0;
  for (const auto& s : segments_) n += s.length() * s.datum().degree();
  return n;
}

std::vector<Segment> RepDescriptor::discrete_factors() const {
  switch (kind_) {
    case RepKind::kSteinberg:
    case RepKind::kProduct:
      return segments_;
    case RepKind::kSpeh:
      if (k() == 1) return segments_;
      throw PreconditionError("Sp_k for k >= 2 is not a product of discrete series");
    case RepKind::kStandardSigma: {
      std::vector<Segment> out;
      const Segment& s = segments_.front();
      for (HalfInt e = s.b(); e >= s.a(); e -= HalfInt::from_int(1)) out.emplace_back(s.datum(), e, e);
      return out;
    }
  }
  return {};
}

bool is_standard(const RepDescriptor& pi) {
  const auto factors = pi.discrete_factors();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i - 1].e_value() < factors[i].e_value()) return false;
  }
  return true;
}

bool is_generic_product(const RepDescriptor& pi) {
  const auto factors = pi.discrete_factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (linked(factors[i], factors[j])) return false;
    }
  }
  return true;
}

RepDescriptor zelevinsky_dual_discrete(const RepDescriptor& pi) {
  switch (pi.kind()) {
    case RepKind::kSteinberg: return RepDescriptor::speh(pi.k(), pi.datum());
    case RepKind::kSpeh: return RepDescriptor::steinberg(pi.k(), pi.datum());
    default:
      throw DomainError("Zelevinsky duality is only implemented for St_k and Sp_k");
  }
}

std::vector<CuspidalDatum> derivative_multiset(const RepDescriptor& pi, std::optional<int> level) {
  if (pi.kind() != RepKind::kStandardSigma && pi.kind() != RepKind::kSteinberg) {
    throw DomainError("derivatives are only available for Sigma_k and St_k");
  }
  const int k = pi.k();
  const int expected = (k - 1) * pi.datum().degree();
  if (level && *level != expected) {
    throw DomainError("only the derivative of level (k-1)r = " + std::to_string(expected) +
                      " is supported");
  }
  std::vector<CuspidalDatum> out;
  if (pi.kind() == RepKind::kSteinberg) {
    out.push_back(pi.datum().twisted(HalfInt::from_twice(k - 1)));
  } else {
    for (int i = 0; i < k; ++i) out.push_back(pi.datum().twisted(HalfInt::from_twice(1 - k + 2 * i)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const CuspidalDatum& rho) {
  std::string out = rho.label();
  if (rho.dual()) out += "^";
  out += "(r=" + std::to_string(rho.degree()) + ",d=" + std::to_string(rho.torsion());
  if (rho.twist() != HalfInt()) out += ",twist=" + rho.twist().str();
  return out + ")";
}

std::string to_string(const Segment& s) {
  return "[" + s.a().str() + "," + s.b().str() + "]@" + to_string(s.datum());
}

std::string to_string(const RepDescriptor& pi) {
  if (pi.kind() == RepKind::kProduct) {
    std::string out;
    for (const auto& s : pi.segments()) {
      if (!out.empty()) out += " x ";
      out += to_string(s);
    }
    return out;
  }
  return std::string(kind_name(pi.kind())) + "(" + std::to_string(pi.k()) + ")@" + to_string(pi.datum());
}

}  // namespace rsl
