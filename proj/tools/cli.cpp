#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nslen/catalog.hpp"
#include "nslen/error.hpp"
#include "nslen/report.hpp"
#include "nslen/verifier.hpp"

namespace nslen {

namespace {

namespace fs = std::filesystem;

struct Settings {
  Limits limits;
  PairStrategy pairs;
  bool json = false;
  bool strict = false;
};

std::string read_file(const fs::path &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::InvalidArgument, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

/// "exhaustive" or "sample:N".
void parse_pairs(const std::string &text, PairStrategy &pairs)
{
  if (text == "exhaustive") {
    pairs.mode = PairMode::Exhaustive;
    return;
  }
  const std::string prefix = "sample:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    std::string digits = text.substr(prefix.size());
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      pairs.mode = PairMode::Sampled;
      pairs.sample_count = std::stoull(digits);
      return;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "--pairs expects exhaustive or sample:N, got " + text);
}

void apply_config(const fs::path &path, Settings &s)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::InvalidArgument, "config " + path.string() + ": " + e.what());
  }
  auto get = [&](const char *key, auto &target) {
    if (j.contains(key))
      target = j.at(key).get<std::remove_reference_t<decltype(target)>>();
  };
  try {
    get("max_enum", s.limits.max_enumerable);
    get("max_small", s.limits.max_small);
    get("lattice_cap", s.limits.lattice_cap);
    get("quotient_cap", s.limits.quotient_cap);
    get("max_exhaustive", s.limits.max_exhaustive);
    get("seed", s.pairs.seed);
    get("json", s.json);
    get("strict", s.strict);
    if (j.contains("pairs"))
      parse_pairs(j.at("pairs").get<std::string>(), s.pairs);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::InvalidArgument, "config " + path.string() + ": " + e.what());
  }
}

/// A spec argument names a file when one exists at that path.
std::string spec_text(const std::string &arg)
{
  if (fs::is_regular_file(arg))
    return read_file(arg);
  return arg;
}

int run_info(const std::string &arg, const Settings &s, std::ostream &out)
{
  std::string text = spec_text(arg);
  PermGroup g = parse_group_spec(text);
  ReportOptions options;
  options.limits = s.limits;
  InvariantReport r = emit_report(g, options, arg);
  out << (s.json ? to_json(r) : to_text(r));
  return s.strict && r.has_tier_error() ? ExitTier : ExitOk;
}

int verdict(const VerificationReport &r, const Settings &s)
{
  if (r.has_proven_failure())
    return ExitProvenFail;
  for (const auto &g : r.groups) {
    for (const auto &e : g.errors) {
      if (e.kind == to_string(ErrorKind::Parse))
        return ExitUsage;
    }
  }
  return s.strict && r.has_tier_error() ? ExitTier : ExitOk;
}

int run_verify(const std::string &arg, const Settings &s, std::ostream &out)
{
  std::string text = spec_text(arg);
  parse_group_spec(text); // parse errors are usage errors here
  VerificationReport r = run_corpus({{arg, text}}, s.pairs, s.limits);
  out << (s.json ? to_json(r) : to_text(r));
  return verdict(r, s);
}

int run_corpus_dir(const std::string &dir, const Settings &s, std::ostream &out)
{
  if (!fs::is_directory(dir))
    throw Error(ErrorKind::InvalidArgument, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".grp")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> corpus;
  for (const auto &f : files)
    corpus.push_back({f.stem().string(), read_file(f)});
  VerificationReport r = run_corpus(corpus, s.pairs, s.limits);
  out << (s.json ? to_json(r) : to_text(r));
  return verdict(r, s);
}

int run_catalog(const Settings &s, std::ostream &out)
{
  auto entries = catalog_entries();
  if (s.json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto &e : entries)
      j.push_back({{"syntax", e.syntax}, {"description", e.description}});
    out << j.dump(2) << "\n";
    return ExitOk;
  }
  for (const auto &e : entries)
    out << e.syntax << "\n    " << e.description << "\n";
  return ExitOk;
}

} // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  Settings s;
  s.pairs.exhaustive_cap = s.limits.max_exhaustive;
  s.pairs.sample_count = s.limits.default_samples;
  try {
    if (const char *config = std::getenv("NSLEN_CONFIG"); config && *config)
      apply_config(config, s);
  } catch (const Error &e) {
    err << "nslen: " << e.what() << "\n";
    return ExitUsage;
  }

  CLI::App app{"Nonsoluble length and generalized Fitting height of permutation groups"};
  app.require_subcommand(1);
  std::string pairs, target;
  app.add_flag("--json", s.json, "JSON output");
  app.add_flag("--strict", s.strict, "exit 3 when a tier limit is hit");
  app.add_option("--max-enum", s.limits.max_enumerable, "largest order to enumerate");
  app.add_option("--max-small", s.limits.max_small, "largest order for lattice work");
  app.add_option("--quotient-cap", s.limits.quotient_cap, "largest coset-action degree");
  app.add_option("--pairs", pairs, "exhaustive | sample:N");
  app.add_option("--seed", s.pairs.seed, "seed for sampled pairs");

  auto *info = app.add_subcommand("info", "invariant report for one group");
  info->add_option("spec", target, "spec file or builder expression")->required();
  auto *verify = app.add_subcommand("verify", "all applicable theorem checks for one group");
  verify->add_option("spec", target, "spec file or builder expression")->required();
  auto *corpus = app.add_subcommand("corpus", "verify every .grp file in a directory");
  corpus->add_option("dir", target, "corpus directory")->required();
  auto *catalog = app.add_subcommand("catalog", "list the group builders");
  for (auto *sub : {info, verify, corpus, catalog})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ExitOk : ExitUsage;
  }

  try {
    if (!pairs.empty())
      parse_pairs(pairs, s.pairs);
    s.pairs.exhaustive_cap = s.limits.max_exhaustive;
    if (info->parsed())
      return run_info(target, s, out);
    if (verify->parsed())
      return run_verify(target, s, out);
    if (corpus->parsed())
      return run_corpus_dir(target, s, out);
    return run_catalog(s, out);
  } catch (const ParseError &e) {
    err << "nslen: parse error: " << e.what() << "\n";
    return ExitUsage;
  } catch (const Error &e) {
    err << "nslen: " << to_string(e.kind()) << ": " << e.what() << "\n";
    if (e.kind() == ErrorKind::TierExceeded || e.kind() == ErrorKind::LatticeCapExceeded)
      return s.strict ? ExitTier : ExitOk;
    return ExitUsage;
  }
}

} // namespace nslen
