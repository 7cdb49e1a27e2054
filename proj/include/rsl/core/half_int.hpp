#ifndef RSL_CORE_HALF_INT_HPP
#define RSL_CORE_HALF_INT_HPP

#include <compare>
#include <string>
#include <string_view>

namespace rsl {

// A number in (1/2)Z, stored as twice its value so that all arithmetic and
// ordering stays in the integers.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  // Accepts "3", "-2", "1/2", "-3/2". Throws ParseError otherwise.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Throws DomainError unless is_integer().
  int to_int() const;

  std::string str() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(HalfInt a, int k) { return HalfInt(a.twice_ * k); }
  friend constexpr HalfInt operator*(int k, HalfInt a) { return HalfInt(a.twice_ * k); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

}  // namespace rsl

#endif  // RSL_CORE_HALF_INT_HPP
