#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <string>

#include "gtest/gtest.h"

#include <json.hpp>

#include "rsl/cli/commands.hpp"
#include "rsl/cli/parse.hpp"
#include "rsl/cli/verify.hpp"
#include "rsl/errors.hpp"

namespace rsl {
namespace {

using nlohmann::json;

TEST(Parse, Examples) {
  const auto st = parse_descriptor("St(3)@rho(r=1,d=1)");
  ASSERT_TRUE(std::holds_alternative<RepDescriptor>(st));
  EXPECT_EQ(std::get<RepDescriptor>(st).kind(), RepKind::kSteinberg);
  EXPECT_EQ(std::get<RepDescriptor>(st).group_size(), 3);

  const auto seg = parse_descriptor("[0,2]@rho(r=2,d=2)");
  ASSERT_TRUE(std::holds_alternative<Segment>(seg));
  EXPECT_EQ(std::get<Segment>(seg).length(), 3);
  EXPECT_EQ(std::get<Segment>(seg).datum(), CuspidalDatum("rho", 2, 2));

  EXPECT_EQ(std::get<RepDescriptor>(parse_descriptor("Sigma(2)@rho^")),
            RepDescriptor::sigma(2, CuspidalDatum("rho", 1, 1, true)));
  EXPECT_EQ(std::get<RepDescriptor>(parse_descriptor(" Sp( 2 ) @ tau ( d=2 , r=4, dual, twist=-1/2 ) ")),
            RepDescriptor::speh(2, CuspidalDatum("tau", 4, 2, true, HalfInt::from_twice(-1))));
  EXPECT_EQ(parse_cuspidal("rho^(r=3,d=1,twist=2)"), CuspidalDatum("rho", 3, 1, true, HalfInt::from_int(2)));
}

TEST(Parse, Products) {
  const CuspidalDatum rho("rho", 1, 1);
  const auto p = parse_representation("[0,1]@rho x [1,2]@rho x St(2)@rho");
  EXPECT_EQ(p, RepDescriptor::product({Segment(rho, HalfInt::from_int(0), HalfInt::from_int(1)),
                                       Segment(rho, HalfInt::from_int(1), HalfInt::from_int(2)),
                                       Segment::centered(rho, 2)}));
  EXPECT_EQ(parse_representation("Sigma(2)@rho x [0,0]@rho").segments().size(), 3u);
  EXPECT_EQ(parse_representation("[0,1]@rho"), RepDescriptor::product({Segment(rho, HalfInt{}, HalfInt::from_int(1))}));
  EXPECT_THROW(parse_representation("Sp(2)@rho x [0,0]@rho"), SemanticError);
  // 'x' only separates when standing alone; "xi" is a label.
  EXPECT_EQ(std::get<Segment>(parse_descriptor("[0,0]@xi")).datum().label(), "xi");
}

TEST(Parse, SemanticErrors) {
  EXPECT_THROW(parse_descriptor("St(2)@rho(r=2,d=3)"), SemanticError);
  EXPECT_THROW(parse_descriptor("St(0)@rho"), SemanticError);
  EXPECT_THROW(parse_descriptor("[2,1]@rho"), SemanticError);
  EXPECT_THROW(parse_descriptor("[0,1/2]@rho"), SemanticError);
  EXPECT_THROW(parse_descriptor("[0,1]@rho x [0,1]@tau(r=0)"), SemanticError);
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_descriptor(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no parse error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("St(3)@rho(r=2,d=)"), 16u);
  EXPECT_EQ(position_of("Foo(3)@rho"), 0u);
  EXPECT_EQ(position_of("St(3)rho"), 5u);
  EXPECT_EQ(position_of("[0,1@rho"), 4u);
  EXPECT_EQ(position_of("St(3)@rho(q=1)"), 10u);
  EXPECT_EQ(position_of("[0,1/3]@rho"), 5u);
  EXPECT_EQ(position_of("St(3)@rho junk"), 10u);
  EXPECT_EQ(position_of(""), 0u);
  try {
    parse_descriptor("St(3)@rho(r=2,d=)");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.expected(), std::vector<std::string>{"integer"});
    EXPECT_NE(std::string(e.what()).find("found ')'"), std::string::npos) << e.what();
  }
}

CuspidalDatum random_datum(std::mt19937_64& rng) {
  static const char* labels[] = {"rho", "tau", "sigma_2", "pi0"};
  std::uniform_int_distribution<int> pick(0, 3), deg(1, 6), tw(-5, 5), coin(0, 1);
  const int r = deg(rng);
  std::vector<int> divisors;
  for (int d = 1; d <= r; ++d)
    if (r % d == 0) divisors.push_back(d);
  const int d = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
  return CuspidalDatum(labels[pick(rng)], r, d, coin(rng) == 1, HalfInt::from_twice(tw(rng)));
}

Segment random_segment(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> a(-6, 6), len(0, 4);
  const HalfInt start = HalfInt::from_twice(a(rng));
  return Segment(random_datum(rng), start, start + HalfInt::from_int(len(rng)));
}

TEST(Parse, RoundTripRandomDescriptors) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> kind(0, 4), k(1, 6), count(2, 4);
  for (int i = 0; i < 1000; ++i) {
    switch (kind(rng)) {
      case 0: {
        const auto s = random_segment(rng);
        EXPECT_EQ(std::get<Segment>(parse_descriptor(to_string(s))), s) << to_string(s);
        break;
      }
      case 1: {
        const auto pi = RepDescriptor::steinberg(k(rng), random_datum(rng));
        EXPECT_EQ(std::get<RepDescriptor>(parse_descriptor(to_string(pi))), pi) << to_string(pi);
        break;
      }
      case 2: {
        const auto pi = RepDescriptor::speh(k(rng), random_datum(rng));
        EXPECT_EQ(std::get<RepDescriptor>(parse_descriptor(to_string(pi))), pi) << to_string(pi);
        break;
      }
      case 3: {
        const auto pi = RepDescriptor::sigma(k(rng), random_datum(rng));
        EXPECT_EQ(std::get<RepDescriptor>(parse_descriptor(to_string(pi))), pi) << to_string(pi);
        break;
      }
      default: {
        std::vector<Segment> segs;
        const int c = count(rng);
        for (int j = 0; j < c; ++j) segs.push_back(random_segment(rng));
        const auto pi = RepDescriptor::product(segs);
        EXPECT_EQ(parse_representation(to_string(pi)), pi) << to_string(pi);
      }
    }
  }
}

TEST(Commands, Formats) {
  EXPECT_EQ(parse_format("json"), OutputFormat::kJson);
  EXPECT_THROW(parse_format("yaml"), PreconditionError);
  EXPECT_EQ(parse_cocharacter("2, 1,-3"), (Cocharacter{2, 1, -3}));
  EXPECT_THROW(parse_cocharacter("2,,1"), ParseError);
  EXPECT_THROW(parse_cocharacter(""), ParseError);
}

TEST(Commands, DepthFromEnvironment) {
  ::setenv("RS_DEPTH", "7", 1);
  EXPECT_EQ(default_depth(), 7);
  ::setenv("RS_DEPTH", "nope", 1);
  EXPECT_EQ(default_depth(), 20);
  ::unsetenv("RS_DEPTH");
  EXPECT_EQ(default_depth(), 20);
}

TEST(Commands, TextOutputs) {
  EXPECT_EQ(whittaker_spherical_command(2, {1, 0}, OutputFormat::kText).text, "W0[Sigma_2](1,0) = 1 + q^(-1)\n");
  EXPECT_EQ(whittaker_essential_command(2, {3}, OutputFormat::kLatex).text, "Wess[St_2](3) = q^{-3}\n");
  const auto pfd = pfd_command({2, 2, 1, {}, false, RepKind::kSteinberg}, OutputFormat::kText);
  EXPECT_EQ(pfd.exit_code, 0);
  EXPECT_NE(pfd.text.find("lambda q/(q - 1)"), std::string::npos) << pfd.text;
  const auto bad = rs_integral_command({"tate", 3, 2, 2, 5, 1}, OutputFormat::kText);
  EXPECT_EQ(bad.exit_code, 0);
  EXPECT_THROW(rs_integral_command({"nope", 3, 2, 2, 5, 1}, OutputFormat::kText), PreconditionError);
}

json load_golden(const std::string& name) {
  std::ifstream in(std::string(RSL_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return json::parse(in);
}

TEST(Golden, JsonOutputsAreStable) {
  const auto J = OutputFormat::kJson;
  auto check = [&](const std::string& file, const CommandOutput& out) {
    EXPECT_EQ(json::parse(out.text), load_golden(file)) << file;
  };
  check("lfactor_l2_k2.json", lfactor_command({2, 2, 1, {}, false, RepKind::kSteinberg}, J));
  check("lfactor_l3_k2_d2_sigma.json",
        lfactor_command({3, 2, 2, HalfInt::from_twice(1), false, RepKind::kStandardSigma}, J));
  check("pfd_l2_k2.json", pfd_command({2, 2, 1, {}, false, RepKind::kSteinberg}, J));
  check("pfd_distinct.json", pfd_command({3, 1, 1, {}, true, RepKind::kSteinberg}, J));
  check("spherical_sigma2_10.json", whittaker_spherical_command(2, {1, 0}, J));
  check("essential_l4_300.json", whittaker_essential_command(4, {3, 0, 0}, J));
  check("rs_tate_d4.json", rs_integral_command({"tate", 3, 2, 2, 4, 1}, J));
  check("rs_distinct_l3_k2_d3.json", rs_integral_command({"steinberg-distinct", 3, 2, 2, 3, 1}, J));
  check("segments_st3.json", segments_command({"St(3)@rho(r=2,d=2)", "[0,1]@rho"}, J));
  check("segments_linked.json", segments_command({"[0,1]@rho", "[1,2]@rho"}, J));
  VerifyOptions v;
  v.suite = "tate";
  v.depth = 6;
  check("verify_tate_d6.json", verify_command(v, J));
}

TEST(Verify, SuitesPass) {
  for (const std::string suite : {"tate", "different-steinberg", "equal-steinberg", "key", "three-way", "mutation",
                                  "properties"}) {
    VerifyOptions opt;
    opt.suite = suite;
    opt.max_l = 4;
    opt.depth = 10;
    const auto report = run_verify(opt);
    EXPECT_FALSE(report.results.empty()) << suite;
    EXPECT_TRUE(report.ok()) << to_text(report);
  }
  VerifyOptions mutation;
  mutation.suite = "mutation";
  for (const auto& r : run_verify(mutation).results) {
    EXPECT_FALSE(r.expect_equal);
    EXPECT_FALSE(r.observed_equal) << r.name;
  }
}

TEST(Verify, ReportIsSortedAndIndependentOfJobs) {
  VerifyOptions opt;
  opt.suite = "all";
  opt.max_l = 3;
  opt.depth = 8;
  const auto serial = to_json(run_verify(opt));
  opt.jobs = 4;
  const auto parallel = to_json(run_verify(opt));
  EXPECT_EQ(serial, parallel);
  const auto& results = serial["results"];
  for (std::size_t i = 1; i < results.size(); ++i) {
    EXPECT_LT(results[i - 1]["name"].get<std::string>(), results[i]["name"].get<std::string>());
  }
  EXPECT_TRUE(serial["pass"].get<bool>());
}

TEST(Verify, RejectsBadOptions) {
  VerifyOptions opt;
  opt.suite = "everything";
  EXPECT_THROW(run_verify(opt), PreconditionError);
  opt.suite = "tate";
  opt.max_l = 0;
  EXPECT_THROW(run_verify(opt), PreconditionError);
}

int run(const std::string& args) {
  const std::string cmd = std::string(RSL_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("verify --suite tate --depth 5"), 0);
  EXPECT_EQ(run("lfactor --l 3 --k 2 --format latex"), 0);
  EXPECT_EQ(run("rs-integral --case spherical-cauchy --n 2 --depth 4 --format json"), 0);
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("bogus"), 2);
  EXPECT_EQ(run("lfactor --l 1 --k 2"), 2);
  EXPECT_EQ(run("segments 'St(2)@rho(r=2,d=3)'"), 2);
  EXPECT_EQ(run("segments 'St(2'"), 2);
  EXPECT_EQ(run("verify --suite nope"), 2);
  EXPECT_EQ(run("whittaker essential --l 3 --lambda 1"), 2);
}

}  // namespace
}  // namespace rsl
