#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "nslen/catalog.hpp"
#include "nslen/error.hpp"
#include "nslen/invariants.hpp"
#include "nslen/report.hpp"

using namespace nslen;
namespace fs = std::filesystem;

namespace {

BigInt factorial(unsigned n)
{
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

ParseError::Reason parse_failure(const std::string &text)
{
  try {
    parse_group_spec(text);
  } catch (const ParseError &e) {
    return e.reason();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError::Reason::Malformed;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args)
{
  args.insert(args.begin(), "nslen");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir()
  {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("nslen_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path &path() const { return path_; }
  void write(const std::string &name, const std::string &text) const
  {
    std::ofstream(path_ / name) << text;
  }

private:
  fs::path path_;
};

} // namespace

TEST(ParseGroupSpec, Examples)
{
  auto s4 = parse_group_spec("Sym(4)");
  EXPECT_EQ(s4.degree(), 4u);
  EXPECT_EQ(s4.order(), 24);
  auto wr = parse_group_spec("Wreath(Alt(5), Sym(2))");
  EXPECT_EQ(wr.degree(), 10u);
  EXPECT_EQ(wr.order(), 7200);
  auto raw = parse_group_spec("degree 5\ngen (1 2 3 4 5)\ngen (1 2 3)\n");
  EXPECT_EQ(raw.order(), 60);
  EXPECT_EQ(parse_group_spec("degree 5 / gen (1 2 3 4 5) / gen (1 2 3)").order(), 60);
  EXPECT_EQ(parse_group_spec("# the corpus quasisimple group\nSL(2,5)").order(), 120);
}

TEST(ParseGroupSpec, ProductSpellings)
{
  for (const char *spec : {"Sym(3) x Cyclic(2)", "Sym(3) * Cyclic(2)", "Sym(3) \xC3\x97 Cyclic(2)",
                           "DirectProduct(Sym(3), Cyclic(2))"}) {
    auto g = parse_group_spec(spec);
    EXPECT_EQ(g.degree(), 5u) << spec;
    EXPECT_EQ(g.order(), 12) << spec;
  }
}

TEST(ParseGroupSpec, Errors)
{
  EXPECT_EQ(parse_failure("Sym(0)"), ParseError::Reason::Range);
  EXPECT_EQ(parse_failure("Dihedral(7)"), ParseError::Reason::Range);
  EXPECT_EQ(parse_failure("Wreath(Sym(2), Sym(13))"), ParseError::Reason::Range);
  EXPECT_EQ(parse_failure("Foo(3)"), ParseError::Reason::UnknownName);
  EXPECT_EQ(parse_failure("SL(2,7)"), ParseError::Reason::UnknownName);
  EXPECT_EQ(parse_failure("Sym(4"), ParseError::Reason::Malformed);
  EXPECT_EQ(parse_failure("degree 3\ngen (1 2 4)"), ParseError::Reason::PointOutOfRange);
  EXPECT_EQ(parse_failure("degree 3\ngen (1 2 1)"), ParseError::Reason::RepeatedPoint);
  try {
    parse_group_spec("degree 4\ngen (1 2)\ngen (1 2");
    ADD_FAILURE();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(NamedBuilders, Examples)
{
  auto sl = named_builder("SL(2,5)");
  EXPECT_EQ(sl.order(), 120);
  EXPECT_EQ(sl.degree(), 24u);
  EXPECT_TRUE(is_quasisimple(sl));
  EXPECT_EQ(h_star(sl), 1u);

  auto gl = named_builder("GL(2,3)");
  EXPECT_EQ(gl.order(), 48);
  EXPECT_EQ(gl.degree(), 8u);
  EXPECT_TRUE(is_soluble(gl));
  EXPECT_EQ(fitting_height(gl), 3u);

  auto psl = named_builder("PSL(2,7)");
  EXPECT_EQ(psl.order(), 168);
  EXPECT_EQ(psl.degree(), 8u);
  EXPECT_TRUE(is_nonabelian_simple(psl));

  EXPECT_THROW(named_builder("PSL(2,8)"), ParseError);
}

TEST(Builders, ClosedFormOrders)
{
  for (unsigned n = 1; n <= 12; ++n) {
    EXPECT_EQ(symmetric_group(n).order(), factorial(n)) << n;
    EXPECT_EQ(alternating_group(n).order(), n == 1 ? BigInt(1) : factorial(n) / 2) << n;
    EXPECT_EQ(cyclic_group(n).order(), n) << n;
  }
  for (unsigned n = 1; n <= 8; ++n)
    EXPECT_EQ(dihedral_group(2 * n).order(), 2 * n) << n;

  const char *parts[] = {"Sym(3)", "Alt(4)", "Cyclic(5)", "Dihedral(8)", "Sym(2)", "GL(2,3)"};
  for (const char *a : parts) {
    for (const char *b : parts) {
      auto ga = parse_group_spec(a), gb = parse_group_spec(b);
      auto prod = parse_group_spec(std::string("DirectProduct(") + a + ", " + b + ")");
      EXPECT_EQ(prod.order(), ga.order() * gb.order()) << a << " " << b;
      EXPECT_EQ(prod.degree(), ga.degree() + gb.degree());
      if (gb.degree() > 4 || ga.order() > 24)
        continue;
      auto wr = parse_group_spec(std::string("Wreath(") + a + ", " + b + ")");
      EXPECT_EQ(wr.order(), boost::multiprecision::pow(ga.order(), static_cast<unsigned>(gb.degree())) *
                              gb.order())
        << a << " wr " << b;
      EXPECT_EQ(wr.degree(), ga.degree() * gb.degree());
    }
  }
}

TEST(RawSpec, RoundTripsRandomGroups)
{
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t degree = 1 + rng() % 12;
    std::size_t count = rng() % 4;
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Point> images(degree);
      for (Point i = 0; i < degree; ++i)
        images[i] = i;
      std::shuffle(images.begin(), images.end(), rng);
      gens.emplace_back(images);
    }
    PermGroup g(degree, gens);
    std::string text = print_raw_spec(g);
    PermGroup back = parse_group_spec(text);
    EXPECT_EQ(back.degree(), g.degree());
    EXPECT_EQ(back.generators(), g.generators());
    EXPECT_EQ(print_raw_spec(back), text);
  }
}

TEST(RawSpec, CanonicalCycleNotation)
{
  auto g = parse_group_spec("degree 6\ngen (5 4)(3 1 2)\n");
  EXPECT_EQ(print_raw_spec(g), "degree 6\ngen (1 2 3)(4 5)\n");
}

TEST(EmitReport, Examples)
{
  auto s5 = emit_report(symmetric_group(5));
  EXPECT_EQ(s5.order, "120");
  EXPECT_EQ(s5.soluble, false);
  EXPECT_EQ(s5.lambda, 1u);
  EXPECT_EQ(s5.h_star, 2u);
  EXPECT_FALSE(s5.fitting_height.has_value());

  auto s4 = emit_report(symmetric_group(4));
  EXPECT_EQ(s4.order, "24");
  EXPECT_EQ(s4.soluble, true);
  EXPECT_EQ(s4.lambda, 0u);
  EXPECT_EQ(s4.h_star, 3u);
  EXPECT_EQ(s4.fitting_height, 3u);

  auto one = emit_report(PermGroup::trivial(1));
  EXPECT_EQ(one.order, "1");
  EXPECT_EQ(one.soluble, true);
  EXPECT_EQ(one.lambda, 0u);
  EXPECT_EQ(one.h_star, 0u);
  EXPECT_EQ(one.fitting_height, 0u);
  EXPECT_TRUE(one.errors.empty());
}

TEST(EmitReport, SolubilityFieldsAgree)
{
  for (const char *spec : {"Sym(3)", "GL(2,3)", "Dihedral(8)", "Alt(5)", "SL(2,5)",
                           "Sym(4) x Sym(5)", "Wreath(Alt(5), Sym(2))"}) {
    auto r = emit_report(parse_group_spec(spec));
    ASSERT_TRUE(r.soluble && r.lambda) << spec;
    EXPECT_EQ(r.fitting_height.has_value(), *r.soluble) << spec;
    EXPECT_EQ(*r.lambda == 0, *r.soluble) << spec;
    if (r.fitting_height)
      EXPECT_EQ(r.fitting_height, r.h_star) << spec;
  }
}

TEST(EmitReport, TierErrorsStayPerField)
{
  ReportOptions options;
  options.limits.max_enumerable = 100;
  options.limits.max_small = 100;
  auto r = emit_report(symmetric_group(8), options);
  EXPECT_EQ(r.order, "40320");
  EXPECT_EQ(r.soluble, false);
  EXPECT_FALSE(r.lambda.has_value());
  EXPECT_FALSE(r.h_star.has_value());
  EXPECT_TRUE(r.has_tier_error());
  bool lambda_error = false;
  for (const auto &e : r.errors)
    lambda_error = lambda_error || (e.field == "lambda" && e.kind == "TierExceeded");
  EXPECT_TRUE(lambda_error);
  auto j = nlohmann::json::parse(to_json(r));
  EXPECT_FALSE(j.contains("lambda"));
  EXPECT_EQ(j["order"], "40320");
}

TEST(ReportJson, StableAcrossRuns)
{
  for (const char *spec : {"Sym(4)", "Sym(5)", "Alt(5) x Alt(5)"}) {
    std::string a = to_json(emit_report(parse_group_spec(spec), {}, spec));
    std::string b = to_json(emit_report(parse_group_spec(spec), {}, spec));
    EXPECT_EQ(a, b);
    auto j = nlohmann::json::parse(a);
    EXPECT_TRUE(j["order"].is_string());
    EXPECT_EQ(j["spec"], spec);
  }
}

TEST(ReportJson, BigOrdersAreDecimalStrings)
{
  auto j = nlohmann::json::parse(to_json(emit_report(symmetric_group(30), {})));
  EXPECT_EQ(j["order"], "265252859812191058636308480000000");
}

TEST(ReportJson, VerificationSummary)
{
  PairStrategy s;
  s.mode = PairMode::Sampled;
  s.sample_count = 50;
  s.seed = 5;
  auto r = run_corpus({{"a5", "Alt(5)"}, {"bad", "Sym(0)"}}, s);
  auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["strategy"]["seed"], 5);
  EXPECT_EQ(j["strategy"]["mode"], "sampled");
  EXPECT_EQ(j["groups"].size(), 2u);
  EXPECT_EQ(j["groups"][0]["result"], "pass");
  EXPECT_EQ(j["groups"][1]["result"], "error");
  EXPECT_EQ(j["summary"]["proven_fail"], 0);
  EXPECT_EQ(j["summary"]["result"], "pass");
  EXPECT_EQ(to_json(r), to_json(run_corpus({{"a5", "Alt(5)"}, {"bad", "Sym(0)"}}, s)));
}

TEST(Cli, InfoJson)
{
  auto r = cli({"info", "Sym(5)", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], "120");
  EXPECT_EQ(j["soluble"], false);
  EXPECT_EQ(j["lambda"], 1);
  EXPECT_EQ(j["h_star"], 2);
  EXPECT_FALSE(j.contains("fitting_height"));
}

TEST(Cli, InfoRangeErrorExitsTwo)
{
  auto r = cli({"info", "Sym(0)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n >= 1"), std::string::npos) << r.err;
}

TEST(Cli, VerifyAlt5)
{
  auto r = cli({"verify", "Alt(5)"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("two_generator_lambda"), std::string::npos);
}

TEST(Cli, SpecFromFile)
{
  TempDir dir;
  dir.write("a5.grp", "# raw Alt(5)\ndegree 5\ngen (1 2 3 4 5)\ngen (1 2 3)\n");
  auto r = cli({"info", (dir.path() / "a5.grp").string(), "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["order"], "60");
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"info"}).code, 2);
  EXPECT_EQ(cli({"verify", "Alt(5)", "--pairs", "sometimes"}).code, 2);
  EXPECT_EQ(cli({"corpus", "/nonexistent/nslen"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Catalog)
{
  auto r = cli({"catalog", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), catalog_entries().size());
}

TEST(Cli, StrictTierExitCode)
{
  EXPECT_EQ(cli({"info", "Sym(8)", "--max-enum", "100"}).code, 0);
  EXPECT_EQ(cli({"info", "Sym(8)", "--max-enum", "100", "--strict"}).code, 3);
}

TEST(Cli, CorpusDirectory)
{
  TempDir dir;
  dir.write("1_s4.grp", "Sym(4)\n");
  dir.write("2_s7.grp", "Sym(7)\n");
  dir.write("notes.txt", "ignored");
  auto r = cli({"corpus", dir.path().string(), "--json", "--max-enum", "1000", "--max-small",
                "1000"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["groups"].size(), 2u);
  EXPECT_EQ(j["groups"][0]["name"], "1_s4");
  EXPECT_EQ(j["groups"][0]["result"], "pass");
  EXPECT_EQ(j["groups"][1]["result"], "error");
  EXPECT_EQ(j["groups"][1]["errors"][0]["kind"], "TierExceeded");
  EXPECT_EQ(cli({"corpus", dir.path().string(), "--max-enum", "1000", "--strict"}).code, 3);

  dir.write("0_bad.grp", "Sym(\n");
  EXPECT_EQ(cli({"corpus", dir.path().string(), "--max-enum", "1000"}).code, 2);
}

TEST(Cli, EmptyCorpus)
{
  TempDir dir;
  auto r = cli({"corpus", dir.path().string(), "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["groups"].empty());
}

TEST(Cli, SampledRunsAreReproducible)
{
  auto a = cli({"verify", "Sym(5)", "--pairs", "sample:40", "--seed", "11", "--json"});
  auto b = cli({"verify", "Sym(5)", "--pairs", "sample:40", "--seed", "11", "--json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["strategy"]["seed"], 11);
  EXPECT_EQ(j["strategy"]["sample_count"], 40);
}

TEST(Cli, ConfigFile)
{
  TempDir dir;
  dir.write("config.json", R"({"max_enum": 100, "strict": true})");
  std::string path = (dir.path() / "config.json").string();
  ::setenv("NSLEN_CONFIG", path.c_str(), 1);
  int from_config = cli({"info", "Sym(8)"}).code;
  int flag_wins = cli({"info", "Sym(6)", "--max-enum", "1000"}).code;
  dir.write("broken.json", "{");
  ::setenv("NSLEN_CONFIG", (dir.path() / "broken.json").string().c_str(), 1);
  int broken = cli({"catalog"}).code;
  ::unsetenv("NSLEN_CONFIG");
  EXPECT_EQ(from_config, 3);
  EXPECT_EQ(flag_wins, 0);
  EXPECT_EQ(broken, 2);
}
