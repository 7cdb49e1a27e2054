#include "rsl/segments/segment.hpp"

#include <utility>

#include "rsl/errors.hpp"

namespace rsl {

Segment::Segment(CuspidalDatum datum, HalfInt a, HalfInt b)
    : datum_(std::move(datum)), a_(a), b_(b) {
  if (!(b_ - a_).is_integer() || b_ < a_) {
    throw SemanticError("segment [" + a_.str() + "," + b_.str() +
                        "] needs b - a to be a nonnegative integer");
  }
}

Segment Segment::centered(const CuspidalDatum& datum, int length) {
  if (length < 1) throw PreconditionError("segment length must be positive");
  return Segment(datum, HalfInt::from_twice(1 - length), HalfInt::from_twice(length - 1));
}

HalfInt Segment::e_value() const {
  // a + b is always an even number of halves since b - a is an integer.
  return HalfInt::from_twice((a_.twice() + b_.twice()) / 2) + datum_.twist();
}

bool linked(const Segment& s1, const Segment& s2) {
  if (!s1.datum().same_inertial_class(s2.datum())) return false;
  if (!(s1.start() - s2.start()).is_integer()) return false;
  const HalfInt one = HalfInt::from_int(1);
  const bool contains12 = s1.start() <= s2.start() && s2.end() <= s1.end();
  const bool contains21 = s2.start() <= s1.start() && s1.end() <= s2.end();
  if (contains12 || contains21) return false;
  return s2.start() <= s1.end() + one && s1.start() <= s2.end() + one;
}

bool precedes(const Segment& s1, const Segment& s2) {
  return linked(s1, s2) && s1.start() < s2.start();
}

}  // namespace rsl
