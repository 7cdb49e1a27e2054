#ifndef RSL_WHITTAKER_COCHARACTER_HPP
#define RSL_WHITTAKER_COCHARACTER_HPP

#include <string>
#include <vector>

namespace rsl {

// lambda in Z^n, standing for diag(w^{lambda_1}, ..., w^{lambda_n}).
// Entries are kept as given; dominance is a query.
class Cocharacter {
 public:
  Cocharacter() = default;
  explicit Cocharacter(std::vector<int> parts);
  Cocharacter(std::initializer_list<int> parts) : Cocharacter(std::vector<int>(parts)) {}
  static Cocharacter zero(int n) { return Cocharacter(std::vector<int>(n, 0)); }

  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }

  bool is_dominant() const;  // nonincreasing
  int total() const;         // sum of entries
  // lambda + m(1, ..., 1)
  Cocharacter shifted(int m) const;
  // (lambda, 0, ..., 0) of length n >= size()
  Cocharacter padded(int n) const;

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
  friend auto operator<=>(const Cocharacter&, const Cocharacter&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Cocharacter& lambda);  // "(2,1,0)"

// Dominant lambda in Z^n with lambda_n >= 0 and sum == size, in
// lexicographically decreasing order.
std::vector<Cocharacter> dominant_of_size(int n, int size);

}  // namespace rsl

#endif  // RSL_WHITTAKER_COCHARACTER_HPP
