#ifndef RSL_RS_INTEGRAL_INTEGRAL_HPP
#define RSL_RS_INTEGRAL_INTEGRAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "rsl/core/base_scalar.hpp"
#include "rsl/core/half_int.hpp"
#include "rsl/core/rational_function.hpp"
#include "rsl/core/truncated_series.hpp"
#include "rsl/whittaker/cocharacter.hpp"
#include "rsl/whittaker/torus_function.hpp"

namespace rsl {

// phi = 1 on o^n.
struct FullLattice {};
// phi = scale * 1 on (p^f)^{n-1} x (1 + p^f). Only the reduced GL_{n-1}
// integral is evaluated, in which f and scale drop out.
struct TestVectorShape {
  int f = 1;
  BaseScalar scale = BaseScalar(1);
};
using SchwartzShape = std::variant<FullLattice, TestVectorShape>;

// Weights of the torus sum. The defaults are the volume-one Iwasawa
// reduction; the switches exist so tests can perturb one component and
// watch an identity break.
struct MeasureConvention {
  bool inverse_modulus = true;  // delta_B^{-1}(w^lambda)
  bool shift = true;            // q^{|lambda|(n-m)/2}, or q^{|mu|} for TestVectorShape
  int support_floor = 0;        // lambda_m >= support_floor
};

struct IntegralSpec {
  int n = 1;
  int m = 1;
  TorusFunction w;
  TorusFunction w_prime;
  std::optional<SchwartzShape> phi;  // required iff n == m
  int depth = 20;
  MeasureConvention weights{};
  int jobs = 1;  // worker threads over degree slices; never changes the result

  // Throws PreconditionError on inconsistent sizes or phi.
  void validate() const;
};

// n > m: sum over dominant lambda in Z^m, lambda_m >= 0, |lambda| <= D, of
// W(lambda, 0) W'(lambda) delta_{B_m}^{-1}(lambda) q^{|lambda|(n-m)/2} X^{|lambda|}.
TruncatedSeries hecke_series(const IntegralSpec& spec);

// n == m. FullLattice: sum over dominant lambda, lambda_n >= 0, of
// W W' delta_{B_n}^{-1} X^{|lambda|}. TestVectorShape: sum over dominant mu in
// Z^{n-1}, mu >= 0, of W(mu,0) W'(mu,0) delta_{B_{n-1}}^{-1}(mu) q^{|mu|} X^{|mu|}.
TruncatedSeries equal_size_series(const IntegralSpec& spec);

// Dispatches on n > m / n == m.
TruncatedSeries integral_series(const IntegralSpec& spec);

struct Verdict {
  bool equal = false;
  std::optional<std::size_t> first_mismatch;
  int depth = 0;
  TruncatedSeries computed{0};
  TruncatedSeries expected{0};
};

// Compares the integral with the expansion of `closed` to spec.depth.
// Throws PreconditionError if `closed` has a pole at X = 0.
Verdict verify_identity(const IntegralSpec& spec, const RationalFunction& closed);

struct KeyVerdict {
  bool holds = false;
  bool rational_identity = false;   // sum_i lambda_i L_i == L(St_l, St_k)
  bool integrals_checked = false;   // d == 1: each L_i realized as a torus sum
  bool integrals_match = true;
  std::optional<int> failing_summand;
  std::optional<std::size_t> first_mismatch;
  std::string detail;
};

// sum_{i<k} lambda_i L(s + s0, nu^{(l-1)/2} rho, nu^{(1-k+2i)/2} rho^vee)
// == L(s + s0, St_l(rho), St_k(rho^vee)), rho of degree and torsion d. For
// d == 1 every summand is also computed as a GL_k x GL_1 torus sum.
KeyVerdict eq_key_check(int l, int k, int d, HalfInt s0 = {}, int depth = 20);

// Standard integrals of the identity battery, each with its closed form.
struct IntegralCase {
  std::string name;
  IntegralSpec spec;
  RationalFunction closed;
};
// W_l^ess x W_k^0(Sigma_k), k < l, against L(St_l, St_k).
IntegralCase steinberg_distinct_case(int l, int k, int depth);
// W_l^ess x W_l^0(Sigma_l), reduced TestVectorShape integral, against L(St_l, St_l).
IntegralCase steinberg_equal_case(int l, int depth);
// Spherical Sigma_n x spherical nu^{1/2} Sigma_n, FullLattice, against
// prod_{i,j} 1/(1 - alpha_i beta_j X).
IntegralCase spherical_cauchy_case(int n, int depth);
// GL_1, trivial characters, 1_o: 1/(1 - X).
IntegralCase tate_case(int depth);

}  // namespace rsl

#endif  // RSL_RS_INTEGRAL_INTEGRAL_HPP
