#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cyclofac/cli.hpp"
#include "cyclofac/error.hpp"
#include "cyclofac/parse.hpp"

using namespace cyclofac;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Term> terms_of(const SparsePoly& p) { return {p.terms().begin(), p.terms().end()}; }

std::size_t error_offset(const char* text) {
  try {
    (void)parse_poly(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for " << text;
  return 0;
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(terms_of(parse_poly("x^6+x^2+2")),
            (std::vector<Term>{{6, Integer(1)}, {2, Integer(1)}, {0, Integer(2)}}));
  EXPECT_EQ(terms_of(parse_poly("2x^4 - 3x^2 - 4")),
            (std::vector<Term>{{4, Integer(2)}, {2, Integer(-3)}, {0, Integer(-4)}}));
  EXPECT_EQ(terms_of(parse_poly("x+x")), (std::vector<Term>{{1, Integer(2)}}));
  EXPECT_EQ(parse_poly("-x^3 + 5*x - 7"), SparsePoly({{3, -1}, {1, 5}, {0, -7}}));
  EXPECT_EQ(parse_poly("x - x"), SparsePoly{});
  EXPECT_EQ(parse_poly("123456789012345678901234567890").constant_term().get_str(),
            "123456789012345678901234567890");
  EXPECT_EQ(parse_poly("x^4294967296").degree(), Exponent{1} << 32);
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("x^"), 2u);
  EXPECT_EQ(error_offset("x+"), 2u);
  EXPECT_EQ(error_offset("x^2 + y"), 6u);
  EXPECT_EQ(error_offset("2x^3x"), 4u);
  EXPECT_EQ(error_offset("++x"), 1u);
  try {
    (void)parse_poly("x^4294967297");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExponentOverflow);
  }
}

TEST(Parse, RoundTripsThroughPrinting) {
  for (const char* s : {"x^6+x^2+2", "-3x^7+x-1", "x^1048576+x^1024+2", "5", "-x", "x^2-x+1"}) {
    const SparsePoly p = parse_poly(s);
    EXPECT_EQ(parse_poly(to_string(p)), p) << s;
  }
}

TEST(Parse, TermList) {
  EXPECT_EQ(parse_terms("6:1,2:1,0:2"), parse_poly("x^6+x^2+2"));
  EXPECT_EQ(parse_terms(" 3:-2 , 0:5 "), parse_poly("-2x^3+5"));
  EXPECT_EQ(parse_terms("1:1,1:1"), parse_poly("2x"));
  EXPECT_THROW((void)parse_terms("6:1,,0:2"), Error);
  EXPECT_THROW((void)parse_terms("6-1"), Error);
  EXPECT_THROW((void)parse_terms("a:1"), Error);
}

TEST(Cli, ClassifyExitCodes) {
  CliRun r = run({"classify", "x^6+x^2+2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("verdict: reducible"), std::string::npos);
  EXPECT_NE(r.out.find("f_c: x^2+1"), std::string::npos);
  EXPECT_EQ(run({"classify", "x^2+x+2"}).code, 0);
  EXPECT_EQ(run({"classify", "x^2+x+3"}).code, 2);
  EXPECT_EQ(run({"classify", "x^3+x"}).code, 2);
  EXPECT_EQ(run({"--terms", "6:1,2:1,0:2", "classify"}).code, 1);
  EXPECT_EQ(run({"--fast", "classify", "x^1048576+x^1024+2"}).code, 0);
  EXPECT_EQ(run({"classify", "x^4+3x^2+4"}).code, 2);
  EXPECT_EQ(run({"classify", "x^4-3x^2-4"}).code, 1);
}

TEST(Cli, ClassifyCheck) {
  CliRun r = run({"--check", "--json", "classify", "x^4+3x^2+4"});
  EXPECT_EQ(r.code, 2);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "undecided");
  EXPECT_EQ(j["check"], "passed");
  EXPECT_EQ(run({"--check", "classify", "x^6+x^2+2"}).code, 1);
  EXPECT_EQ(run({"--check", "classify", "x^40+x+2"}).code, kExitData);
}

TEST(Cli, JsonReport) {
  const CliRun r = run({"--json", "classify", "x^6+x^2+2"});
  ASSERT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "classify");
  EXPECT_EQ(j["input"], "x^6+x^2+2");
  EXPECT_EQ(j["f_c"], "x^2+1");
  EXPECT_EQ(j["f_n"], "x^4-x^2+2");
  EXPECT_TRUE(j["timings"]["total_ms"].is_number());
  // Keys come out sorted.
  std::string prev;
  for (const auto& [k, v] : j.items()) {
    EXPECT_LT(prev, k);
    prev = k;
  }
}

TEST(Cli, CyclofactorReport) {
  const CliRun r = run({"--json", "cyclofactor", "x^12+x^4+2"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["f_c"], "x^4+1");
  EXPECT_EQ(j["cofactor"], "x^8-x^4+2");
}

TEST(Cli, Discriminant) {
  CliRun r = run({"--json", "disc", "2", "1", "1", "-2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["discriminant"], "9");
  r = run({"--check", "--json", "disc", "3", "1", "1", "1"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["discriminant"], "-31");
  EXPECT_EQ(j["resultant_discriminant"], "-31");
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(run({"disc", "2", "1", "0", "1"}).code, kExitData);
  EXPECT_EQ(run({"disc", "2", "3", "1", "1"}).code, kExitData);
}

TEST(Cli, Separable) {
  EXPECT_EQ(run({"separable", "x^5+2x^2+3"}).code, 0);
  EXPECT_EQ(run({"separable", "x^8-x^7-x-1"}).code, 0);
  const CliRun r = run({"--json", "separable", "x^4+x^3+x+1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["repeated_factor"], "x+1");
  EXPECT_EQ(run({"separable", "x^3-3x+2"}).code, 1);
}

TEST(Cli, UsageAndDataErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"disc", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--family", "trinomial", "--bogus"}).code, kExitUsage);
  CliRun r = run({"classify", "x^2+"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("offset"), std::string::npos);
  EXPECT_EQ(run({"sweep", "--family", "pentanomial"}).code, kExitData);
  EXPECT_EQ(run({"sweep", "--family", "trinomial", "--n", "5..x"}).code, kExitData);
  EXPECT_EQ(run({"--output", "/nonexistent-dir/out.txt", "classify", "x^2+x+2"}).code, kExitData);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "cyclofac_cli_output_test.json";
  std::filesystem::remove(path);
  const CliRun r = run({"--json", "--output", path.string(), "classify", "x^2+x+2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(json::parse(line)["verdict"], "irreducible");
  std::filesystem::remove(path);
}

TEST(Cli, SweepIsDeterministic) {
  const std::vector<std::string> base{"sweep", "--family", "trinomial", "--n", "2..9", "--p", "2..7"};
  auto with_jobs = [&](const char* jobs) {
    std::vector<std::string> a{"--jobs", jobs};
    a.insert(a.end(), base.begin(), base.end());
    return run(a);
  };
  const CliRun one = with_jobs("1");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, with_jobs("1").out);
  EXPECT_EQ(one.out, with_jobs("4").out);
  EXPECT_EQ(one.out.substr(0, one.out.find('\n')),
            "family,a,b,p,n,m,eps1,eps2,verdict,case,cyclo_factor,checked");

  const CliRun rnd1 = run({"--seed", "3", "sweep", "--family", "prime-sum-random", "--count", "40"});
  const CliRun rnd2 = run({"--seed", "3", "--jobs", "3", "sweep", "--family", "prime-sum-random", "--count", "40"});
  ASSERT_EQ(rnd1.code, 0);
  EXPECT_EQ(rnd1.out, rnd2.out);
  EXPECT_NE(rnd1.out, run({"--seed", "4", "sweep", "--family", "prime-sum-random", "--count", "40"}).out);
}

TEST(Cli, SweepEmptyRangeGivesHeaderOnly) {
  const CliRun r = run({"sweep", "--family", "trinomial", "--n", "5..4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "family,a,b,p,n,m,eps1,eps2,verdict,case,cyclo_factor,checked\n");
}

TEST(Cli, SweepRowsAgreeUnderCheck) {
  CliRun r = run({"--check", "sweep", "--family", "trinomial", "--n", "2..8", "--p", "2..7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find(",no\n"), std::string::npos);
  EXPECT_NE(r.out.find(",yes\n"), std::string::npos);

  r = run({"--check", "sweep", "--family", "quadrinomial", "--n", "3..7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find(",no\n"), std::string::npos);
}

TEST(Cli, SweepJsonLines) {
  const CliRun r = run({"--json", "sweep", "--family", "trinomial", "--n", "2..3", "--p", "2"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const json j = json::parse(line);
    EXPECT_EQ(j["family"], "trinomial");
    ++rows;
  }
  EXPECT_GT(rows, 0);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--count", "0"}).code, 0);
  CliRun r = run({"--seed", "42", "verify", "--count", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("instances: 50, passed: 50, failed: 0, skipped: 0"), std::string::npos);
  r = run({"verify", "--count", "3", "--max-degree", "50", "--min-terms", "3", "--p", "53..97"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("skipped: "), std::string::npos);
}
