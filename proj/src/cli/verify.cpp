#include "rsl/cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "rsl/core/base_scalar.hpp"
#include "rsl/errors.hpp"
#include "rsl/lfactor/lfactor.hpp"
#include "rsl/rs_integral/integral.hpp"
#include "rsl/segments/descriptor.hpp"
#include "rsl/segments/segment.hpp"
#include "rsl/whittaker/schur.hpp"

namespace rsl {

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const IdentityResult& r) { return !r.passed(); }));
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"tate",  "different-steinberg", "equal-steinberg",
                                                  "cauchy", "key", "three-way", "mutation", "properties", "all"};
  return suites;
}

namespace {

using Task = std::function<IdentityResult()>;

struct Battery {
  const VerifyOptions& opt;
  std::vector<Task> tasks;

  bool wants(const std::string& suite) const { return opt.suite == "all" || opt.suite == suite; }

  void add(std::string suite, std::string instance, std::string anchor, std::function<void(IdentityResult&)> body,
           bool expect_equal = true) {
    tasks.push_back([=] {
      IdentityResult r;
      r.name = suite + "/" + instance;
      r.suite = suite;
      r.anchor = anchor;
      r.expect_equal = expect_equal;
      try {
        body(r);
      } catch (const std::exception& e) {
        r.observed_equal = false;
        r.expect_equal = true;  // an exception is never the expected outcome
        r.detail = std::string("error: ") + e.what();
      }
      return r;
    });
  }

  void add_integral(const std::string& suite, const std::string& instance, const std::string& anchor,
                    IntegralCase c, bool expect_equal = true) {
    add(suite, instance, anchor, [c](IdentityResult& r) {
      const auto v = verify_identity(c.spec, c.closed);
      r.observed_equal = v.equal;
      r.first_mismatch = v.first_mismatch;
    }, expect_equal);
  }
};

std::string lk(int l, int k) { return "l=" + std::to_string(l) + ",k=" + std::to_string(k); }

void grid(const VerifyOptions& opt, const std::function<void(int, int, int, HalfInt)>& f) {
  for (int l = 1; l <= opt.max_l; ++l)
    for (int k = 1; k <= std::min(l, 3); ++k)
      for (int d = 1; d <= 3; ++d)
        for (int s2 : {0, 1}) f(l, k, d, HalfInt::from_twice(s2));
}

std::string grid_name(int l, int k, int d, HalfInt s0) {
  return lk(l, k) + ",d=" + std::to_string(d) + ",s0=" + s0.str();
}

BaseScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> e(-3, 3);
  BaseScalar num = BaseScalar(c(rng)) * BaseScalar::u_power(e(rng)) + BaseScalar(c(rng));
  BaseScalar den = BaseScalar::u_power(e(rng)) + BaseScalar(1 + std::abs(c(rng)));
  return num / den;
}

void add_properties(Battery& b) {
  const std::uint64_t seed = b.opt.seed;
  b.add("properties", "field-laws", "(a+b)c = ac+bc, a/a = 1, (ab)c = a(bc)", [seed](IdentityResult& r) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_scalar(rng), bb = random_scalar(rng), c = random_scalar(rng);
      if ((a + bb) * c != a * c + bb * c || (a * bb) * c != a * (bb * c) || (!a.is_zero() && a / a != BaseScalar(1))) {
        r.detail = "law violated at case " + std::to_string(i);
        return;
      }
    }
    r.observed_equal = true;
  });
  b.add("properties", "linked-symmetry", "linked(A,B) = linked(B,A); precedes implies linked", [seed](IdentityResult& r) {
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<int> x(-6, 6);
    std::uniform_int_distribution<int> len(0, 4);
    const CuspidalDatum rho("rho", 1, 1);
    for (int i = 0; i < 500; ++i) {
      const int a1 = x(rng), a2 = x(rng);
      const Segment s(rho, HalfInt::from_int(a1), HalfInt::from_int(a1 + len(rng)));
      const Segment t(rho, HalfInt::from_int(a2), HalfInt::from_int(a2 + len(rng)));
      if (linked(s, t) != linked(t, s) || (precedes(s, t) && !linked(s, t)) || (precedes(s, t) && precedes(t, s))) {
        r.detail = "violated for " + to_string(s) + " and " + to_string(t);
        return;
      }
    }
    r.observed_equal = true;
  });
  b.add("properties", "duality-involution", "dual(dual(St_k)) = St_k, dual(St_k) = Sp_k", [](IdentityResult& r) {
    const CuspidalDatum rho("rho", 2, 2);
    for (int k = 1; k <= 12; ++k) {
      const auto st = RepDescriptor::steinberg(k, rho);
      if (zelevinsky_dual_discrete(zelevinsky_dual_discrete(st)) != st ||
          zelevinsky_dual_discrete(st) != RepDescriptor::speh(k, rho)) {
        r.detail = "fails at k=" + std::to_string(k);
        return;
      }
    }
    r.observed_equal = true;
  });
  b.add("properties", "schur-two-algorithms", "Jacobi-Trudi = bialternant, |lambda| <= 8, n <= 4", [](IdentityResult& r) {
    for (int n = 1; n <= 4; ++n) {
      const auto p = SatakeParams::sigma(n, HalfInt::from_twice(1));
      for (int size = 0; size <= 8; ++size)
        for (const auto& lambda : dominant_of_size(n, size))
          if (schur(p, lambda) != schur_bialternant(p, lambda)) {
            r.detail = "differs at " + to_string(lambda);
            return;
          }
    }
    r.observed_equal = true;
  });
  const int depth = b.opt.depth;
  b.add("properties", "monotone-truncation", "series(D) = series(D') truncated to D", [depth](IdentityResult& r) {
    const int small = std::max(0, depth / 2);
    const auto lo = integral_series(steinberg_distinct_case(4, 2, small).spec);
    const auto hi = integral_series(steinberg_distinct_case(4, 2, depth).spec);
    r.observed_equal = hi.truncated(static_cast<std::size_t>(small)) == lo;
  });
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  const auto& suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), opt.suite) == suites.end()) {
    throw PreconditionError("unknown suite '" + opt.suite + "'");
  }
  if (opt.max_l < 1) throw PreconditionError("--max-l must be at least 1");
  if (opt.depth < 0) throw PreconditionError("--depth must be nonnegative");
  if (opt.jobs < 1) throw PreconditionError("--jobs must be positive");

  Battery b{opt, {}};
  const int D = opt.depth;
  if (b.wants("tate")) b.add_integral("tate", "n=1", "I_1(W, W', 1_o) = 1/(1 - X)", tate_case(D));
  if (b.wants("different-steinberg")) {
    for (int l = 2; l <= opt.max_l; ++l)
      for (int k = 1; k < l; ++k)
        b.add_integral("different-steinberg", lk(l, k), "I_{l,k}(W_l^ess, W_k^0) = L(s, St_l, Sp_k)",
                       steinberg_distinct_case(l, k, D));
  }
  if (b.wants("equal-steinberg")) {
    for (int l = 2; l <= opt.max_l; ++l)
      b.add_integral("equal-steinberg", "l=" + std::to_string(l), "I_l(W_l^ess, W_l^0, phi) = L(s, St_l, Sp_l)",
                     steinberg_equal_case(l, D));
  }
  if (b.wants("cauchy")) {
    for (int n = 1; n <= std::min(3, opt.max_l); ++n)
      b.add_integral("cauchy", "n=" + std::to_string(n), "sum s_lambda(a) s_lambda(b) X^|lambda| = prod 1/(1 - a_i b_j X)",
                     spherical_cauchy_case(n, std::min(D, 16)));
  }
  if (b.wants("key")) {
    grid(opt, [&](int l, int k, int d, HalfInt s0) {
      b.add("key", grid_name(l, k, d, s0), "sum_i lambda_i L(s, nu^{(l-1)/2} rho, nu^{(1-k+2i)/2} rho^vee) = L(s, St_l, St_k)",
            [=](IdentityResult& r) {
              const auto v = eq_key_check(l, k, d, s0, D);
              r.observed_equal = v.holds;
              r.first_mismatch = v.first_mismatch;
              r.detail = v.detail;
            });
    });
  }
  if (b.wants("three-way")) {
    grid(opt, [&](int l, int k, int d, HalfInt s0) {
      b.add("three-way", grid_name(l, k, d, s0), "L(s, St_l, St_k) = L(s, St_l, Sigma_k) = L(s, St_l, Sp_k)",
            [=](IdentityResult& r) {
              const auto st = l_steinberg_pair(LFactorSpec::family(l, k, d, s0, RepKind::kSteinberg));
              const auto sigma = l_steinberg_pair(LFactorSpec::family(l, k, d, s0, RepKind::kStandardSigma));
              const auto sp = l_steinberg_pair(LFactorSpec::family(l, k, d, s0, RepKind::kSpeh));
              const auto pf = partial_fractions(LFactorSpec::family(l, k, d, s0));
              BaseScalar sum;
              for (const auto& t : pf.terms) sum += t.coefficient;
              r.observed_equal = st == sigma && st == sp && recombine(pf) == st && sum == BaseScalar(1);
              if (!r.observed_equal) r.detail = "canonical forms differ";
            });
    });
  }
  if (b.wants("mutation")) {
    const char* names[] = {"no-inverse-modulus", "no-shift", "support-floor-1"};
    for (int which = 0; which < 3; ++which) {
      for (auto c : {steinberg_distinct_case(3, 2, std::min(D, 10)), steinberg_equal_case(3, std::min(D, 10))}) {
        if (which == 0) c.spec.weights.inverse_modulus = false;
        if (which == 1) c.spec.weights.shift = false;
        if (which == 2) c.spec.weights.support_floor = 1;
        b.add_integral("mutation", c.name + "," + names[which], "perturbed measure must break the identity", c, false);
      }
    }
  }
  if (b.wants("properties")) add_properties(b);

  VerifyReport report;
  report.options = opt;
  report.results.resize(b.tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < b.tasks.size(); i = next++) report.results[i] = b.tasks[i]();
  };
  if (opt.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < opt.jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const IdentityResult& a, const IdentityResult& b) { return a.name < b.name; });
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json j = {{"name", r.name},
                        {"suite", r.suite},
                        {"anchor", r.anchor},
                        {"expected", r.expect_equal ? "equal" : "mismatch"},
                        {"observed", r.observed_equal ? "equal" : "mismatch"},
                        {"pass", r.passed()}};
    j["first_mismatch"] = r.first_mismatch ? nlohmann::json(*r.first_mismatch) : nlohmann::json(nullptr);
    if (!r.detail.empty()) j["detail"] = r.detail;
    results.push_back(std::move(j));
  }
  const auto& o = report.options;
  return {{"suite", o.suite},
          {"max_l", o.max_l},
          {"depth", o.depth},
          {"seed", o.seed},
          {"total", report.results.size()},
          {"failures", report.failures()},
          {"pass", report.ok()},
          {"results", std::move(results)}};
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name;
    if (!r.expect_equal) out << " (negative control)";
    if (!r.passed() && r.first_mismatch) out << " first mismatch at X^" << *r.first_mismatch;
    if (!r.detail.empty() && !r.passed()) out << " : " << r.detail;
    out << "\n";
  }
  out << report.results.size() - report.failures() << "/" << report.results.size() << " identities passed\n";
  return out.str();
}

}  // namespace rsl
