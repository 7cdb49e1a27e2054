#ifndef RSL_SEGMENTS_SEGMENT_HPP
#define RSL_SEGMENTS_SEGMENT_HPP

#include <compare>

#include "rsl/core/half_int.hpp"
#include "rsl/segments/cuspidal.hpp"

namespace rsl {

// The cuspidal segment [nu^a rho, nu^{a+1} rho, ..., nu^b rho].
class Segment {
 public:
  // Throws SemanticError unless b - a is a nonnegative integer.
  Segment(CuspidalDatum datum, HalfInt a, HalfInt b);
  // [nu^{(1-k)/2} rho, ..., nu^{(k-1)/2} rho].
  static Segment centered(const CuspidalDatum& datum, int length);

  const CuspidalDatum& datum() const { return datum_; }
  HalfInt a() const { return a_; }
  HalfInt b() const { return b_; }
  int length() const { return (b_ - a_).to_int() + 1; }

  // Endpoints with the datum's own twist folded in.
  HalfInt start() const { return a_ + datum_.twist(); }
  HalfInt end() const { return b_ + datum_.twist(); }
  // Central exponent (a + b)/2 + twist.
  HalfInt e_value() const;

  friend auto operator<=>(const Segment&, const Segment&) = default;

 private:
  CuspidalDatum datum_;
  HalfInt a_;
  HalfInt b_;
};

// Same inertial class, integral offset, neither contains the other, and the
// union is again a segment.
bool linked(const Segment& s1, const Segment& s2);
// linked and s1 starts strictly before s2.
bool precedes(const Segment& s1, const Segment& s2);

}  // namespace rsl

#endif  // RSL_SEGMENTS_SEGMENT_HPP
