#ifndef RSL_SEGMENTS_DESCRIPTOR_HPP
#define RSL_SEGMENTS_DESCRIPTOR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsl/segments/cuspidal.hpp"
#include "rsl/segments/segment.hpp"

namespace rsl {

enum class RepKind {
  kSteinberg,       // St_k(rho)
  kSpeh,            // Sp_k(rho), the Zelevinsky dual of St_k(rho)
  kStandardSigma,   // Sigma_k(rho) = nu^{(k-1)/2} rho x ... x nu^{(1-k)/2} rho
  kProduct,         // St(Delta_1) x ... x St(Delta_t)
};

std::string_view kind_name(RepKind kind);

class RepDescriptor {
 public:
  static RepDescriptor steinberg(int k, const CuspidalDatum& rho);
  static RepDescriptor speh(int k, const CuspidalDatum& rho);
  static RepDescriptor sigma(int k, const CuspidalDatum& rho);
  static RepDescriptor product(std::vector<Segment> segments);

  RepKind kind() const { return kind_; }
  // For St/Sp/Sigma the single centered segment; for products the factors.
  const std::vector<Segment>& segments() const { return segments_; }
  // k for St/Sp/Sigma. Throws DomainError for products.
  int k() const;
  const CuspidalDatum& datum() const { return segments_.front().datum(); }
  // n = sum of length * r over the segments.
  int group_size() const;

  // The discrete series factors whose product this is. Sigma_k expands to
  // its k cuspidal factors in decreasing order. Throws PreconditionError for
  // Sp_k with k >= 2, which is not a product of discrete series.
  std::vector<Segment> discrete_factors() const;

  friend bool operator==(const RepDescriptor&, const RepDescriptor&) = default;

 private:
  RepDescriptor(RepKind kind, std::vector<Segment> segments);
  RepKind kind_;
  std::vector<Segment> segments_;
};

// e-values nonincreasing along the discrete factors.
bool is_standard(const RepDescriptor& pi);
// Discrete factors pairwise unlinked.
bool is_generic_product(const RepDescriptor& pi);
// St_k <-> Sp_k. Throws DomainError for other kinds.
RepDescriptor zelevinsky_dual_discrete(const RepDescriptor& pi);

// Derivative of level (k-1)r of Sigma_k(rho) or St_k(rho), as the sorted
// multiset of cuspidal constituents. Other kinds or levels throw DomainError.
std::vector<CuspidalDatum> derivative_multiset(const RepDescriptor& pi,
                                               std::optional<int> level = std::nullopt);

// Printing in the CLI grammar; parse_descriptor() reads it back.
std::string to_string(const CuspidalDatum& rho);
std::string to_string(const Segment& s);
std::string to_string(const RepDescriptor& pi);

}  // namespace rsl

#endif  // RSL_SEGMENTS_DESCRIPTOR_HPP
