#ifndef RSL_SEGMENTS_CUSPIDAL_HPP
#define RSL_SEGMENTS_CUSPIDAL_HPP

#include <compare>
#include <string>

#include "rsl/core/half_int.hpp"

namespace rsl {

// A cuspidal representation nu^twist * rho of G_r, described abstractly:
// rho is named by an opaque label, `dual` marks rho^vee, and d = |R(rho)| is
// the number of unramified characters fixing rho.
class CuspidalDatum {
 public:
  // The trivial character of G_1.
  CuspidalDatum() = default;
  // Throws SemanticError unless r >= 1, d >= 1 and d divides r.
  CuspidalDatum(std::string label, int degree, int torsion, bool dual = false, HalfInt twist = {});

  const std::string& label() const { return label_; }
  int degree() const { return degree_; }
  int torsion() const { return torsion_; }
  bool dual() const { return dual_; }
  HalfInt twist() const { return twist_; }

  CuspidalDatum twisted(HalfInt by) const;
  // (nu^c rho)^vee = nu^{-c} rho^vee.
  CuspidalDatum contragredient() const;

  // Same underlying rho (or rho^vee) up to an unramified twist.
  bool same_inertial_class(const CuspidalDatum& o) const;

  friend auto operator<=>(const CuspidalDatum&, const CuspidalDatum&) = default;

 private:
  std::string label_ = "rho";
  int degree_ = 1;
  int torsion_ = 1;
  bool dual_ = false;
  HalfInt twist_;
};

// True when `other` is an unramified twist of the contragredient of `rho`.
bool is_twist_of_dual(const CuspidalDatum& rho, const CuspidalDatum& other);

// The exponent t with other = nu^t rho^vee. Requires is_twist_of_dual.
HalfInt twist_offset_to_dual(const CuspidalDatum& rho, const CuspidalDatum& other);

}  // namespace rsl

#endif  // RSL_SEGMENTS_CUSPIDAL_HPP
