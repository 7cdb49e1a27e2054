#include "rsl/segments/cuspidal.hpp"

#include <cctype>
#include <utility>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

bool valid_label(const std::string& label) {
  if (label.empty() || label == "x") return false;
  if (!(std::isalpha(static_cast<unsigned char>(label.front())) || label.front() == '_')) return false;
  for (char c : label) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

CuspidalDatum::CuspidalDatum(std::string label, int degree, int torsion, bool dual, HalfInt twist)
    : label_(std::move(label)), degree_(degree), torsion_(torsion), dual_(dual), twist_(twist) {
  if (!valid_label(label_)) throw SemanticError("invalid cuspidal label '" + label_ + "'");
  if (degree_ < 1) throw SemanticError("degree r must be positive");
  if (torsion_ < 1) throw SemanticError("torsion d must be positive");
  if (degree_ % torsion_ != 0) {
    throw SemanticError("torsion d = " + std::to_string(torsion_) + " does not divide r = " +
                        std::to_string(degree_));
  }
}

CuspidalDatum CuspidalDatum::twisted(HalfInt by) const {
  CuspidalDatum out = *this;
  out.twist_ += by;
  return out;
}

CuspidalDatum CuspidalDatum::contragredient() const {
  CuspidalDatum out = *this;
  out.dual_ = !dual_;
  out.twist_ = -twist_;
  return out;
}

bool CuspidalDatum::same_inertial_class(const CuspidalDatum& o) const {
  return label_ == o.label_ && degree_ == o.degree_ && torsion_ == o.torsion_ && dual_ == o.dual_;
}

bool is_twist_of_dual(const CuspidalDatum& rho, const CuspidalDatum& other) {
  return rho.contragredient().same_inertial_class(other);
}

HalfInt twist_offset_to_dual(const CuspidalDatum& rho, const CuspidalDatum& other) {
  if (!is_twist_of_dual(rho, other)) {
    throw PreconditionError("not an unramified twist of the contragredient");
  }
  return other.twist() - rho.contragredient().twist();
}

}  // namespace rsl
