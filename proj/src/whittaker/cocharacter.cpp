#include "rsl/whittaker/cocharacter.hpp"

#include <numeric>
#include <utility>

#include "rsl/errors.hpp"

namespace rsl {

Cocharacter::Cocharacter(std::vector<int> parts) : parts_(std::move(parts)) {}

bool Cocharacter::is_dominant() const {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i - 1] < parts_[i]) return false;
  }
  return true;
}

int Cocharacter::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Cocharacter Cocharacter::shifted(int m) const {
  auto out = parts_;
  for (int& x : out) x += m;
  return Cocharacter(std::move(out));
}

Cocharacter Cocharacter::padded(int n) const {
  if (n < size()) throw PreconditionError("cannot pad a cocharacter to a shorter length");
  auto out = parts_;
  out.resize(n, 0);
  return Cocharacter(std::move(out));
}

std::string to_string(const Cocharacter& lambda) {
  std::string out = "(";
  for (int i = 0; i < lambda.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out + ")";
}

namespace {

void partitions(int slots, int remaining, int cap, std::vector<int>& cur, std::vector<Cocharacter>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int x = std::min(cap, remaining); x >= 0; --x) {
    if (x * slots < remaining) break;  // can't fill the rest
    cur.push_back(x);
    partitions(slots - 1, remaining - x, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Cocharacter> dominant_of_size(int n, int size) {
  if (n < 1 || size < 0) return {};
  std::vector<Cocharacter> out;
  std::vector<int> cur;
  partitions(n, size, size, cur, out);
  return out;
}

}  // namespace rsl
