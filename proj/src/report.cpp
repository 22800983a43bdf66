#include "nslen/report.hpp"

#include <json.hpp>
#include <sstream>

#include "nslen/error.hpp"
#include "nslen/invariants.hpp"

namespace nslen {

using Json = nlohmann::ordered_json;

namespace {

Json series_json(const SeriesReport &s)
{
  Json j;
  j["direction"] = s.direction == SeriesReport::Direction::Ascending ? "ascending" : "descending";
  j["length"] = s.length();
  Json orders = Json::array();
  for (const auto &n : s.orders())
    orders.push_back(to_string(n));
  j["orders"] = std::move(orders);
  Json labels = Json::array();
  for (auto l : s.labels)
    labels.push_back(to_string(l));
  j["labels"] = std::move(labels);
  return j;
}

std::string join_orders(const SeriesReport &s)
{
  std::string out;
  for (const auto &n : s.orders())
    out += (out.empty() ? "" : " ") + to_string(n);
  return out;
}

} // namespace

bool InvariantReport::has_tier_error() const
{
  for (const auto &e : errors) {
    if (e.kind == to_string(ErrorKind::TierExceeded) ||
        e.kind == to_string(ErrorKind::LatticeCapExceeded))
      return true;
  }
  return false;
}

InvariantReport emit_report(const PermGroup &g, const ReportOptions &options,
                            const std::string &spec)
{
  const Limits &limits = options.limits;
  InvariantReport r;
  r.spec = spec;
  r.degree = g.degree();
  r.order = to_string(g.order());
  r.tier_notes.push_back("order: " + to_string(Tier::ChainOnly));

  auto field = [&](const char *name, Tier tier, auto compute) {
    try {
      compute();
      r.tier_notes.push_back(std::string(name) + ": " + to_string(tier));
    } catch (const Error &e) {
      r.errors.push_back({name, to_string(e.kind()), e.what()});
    }
  };

  field("soluble", Tier::ChainOnly, [&] { r.soluble = is_soluble(g); });
  field("lambda", Tier::Enumerable, [&] { r.lambda = nonsoluble_length(g, limits); });
  field("h_star", Tier::Enumerable, [&] { r.h_star = h_star(g, limits); });
  if (r.soluble.value_or(false))
    field("fitting_height", Tier::Enumerable, [&] { r.fitting_height = fitting_height(g, limits); });

  if (options.series) {
    auto add = [&](const char *name, Tier tier, auto build) {
      field(name, tier, [&] { r.series.emplace_back(name, build()); });
    };
    add("generalized_fitting_series", Tier::Enumerable,
        [&] { return generalized_fitting_series(g, limits); });
    add("lambda_series", Tier::Enumerable, [&] { return lambda_series(g, limits); });
    if (r.soluble.value_or(false))
      add("fitting_series", Tier::Enumerable, [&] { return fitting_series(g, limits); });
    add("t_series", Tier::Small, [&] { return t_series(g, limits); });
    add("k_series", Tier::Small, [&] { return k_series(g, limits); });
  }
  return r;
}

std::string to_json(const InvariantReport &r)
{
  Json j;
  if (!r.spec.empty())
    j["spec"] = r.spec;
  j["degree"] = r.degree;
  j["order"] = r.order;
  if (r.soluble)
    j["soluble"] = *r.soluble;
  if (r.lambda)
    j["lambda"] = *r.lambda;
  if (r.h_star)
    j["h_star"] = *r.h_star;
  if (r.fitting_height)
    j["fitting_height"] = *r.fitting_height;
  Json series = Json::object();
  for (const auto &[name, s] : r.series)
    series[name] = series_json(s);
  j["series"] = std::move(series);
  j["tier_notes"] = r.tier_notes;
  Json errors = Json::array();
  for (const auto &e : r.errors)
    errors.push_back({{"field", e.field}, {"kind", e.kind}, {"message", e.message}});
  j["errors"] = std::move(errors);
  return j.dump(2) + "\n";
}

std::string to_text(const InvariantReport &r)
{
  std::ostringstream out;
  if (!r.spec.empty())
    out << "group           " << r.spec << "\n";
  out << "degree          " << r.degree << "\n";
  out << "order           " << r.order << "\n";
  if (r.soluble)
    out << "soluble         " << (*r.soluble ? "yes" : "no") << "\n";
  if (r.lambda)
    out << "lambda          " << *r.lambda << "\n";
  if (r.h_star)
    out << "h*              " << *r.h_star << "\n";
  if (r.fitting_height)
    out << "fitting height  " << *r.fitting_height << "\n";
  for (const auto &[name, s] : r.series)
    out << name << ": " << join_orders(s) << "\n";
  for (const auto &e : r.errors)
    out << "error (" << e.field << "): " << e.kind << ": " << e.message << "\n";
  return out.str();
}

std::string to_json(const VerificationReport &report)
{
  Json j;
  const PairStrategy &s = report.strategy;
  j["strategy"] = {{"mode", to_string(s.mode)},
                   {"sample_count", s.sample_count},
                   {"seed", s.seed},
                   {"exhaustive_cap", s.exhaustive_cap}};
  std::size_t pass = 0, fail = 0, evidence = 0, errors = 0;
  Json groups = Json::array();
  for (const auto &g : report.groups) {
    Json row;
    row["name"] = g.name;
    row["spec"] = g.spec;
    row["order"] = g.order;
    row["result"] = g.has_proven_failure() ? "fail" : (g.errors.empty() ? "pass" : "error");
    Json outcomes = Json::array();
    for (const auto &o : g.outcomes) {
      Json oj;
      oj["theorem_id"] = o.theorem_id;
      oj["status"] = to_string(o.status);
      Json constants = Json::object();
      for (const auto &[k, v] : o.constants)
        constants[k] = v;
      oj["constants"] = std::move(constants);
      oj["witness"] = o.witness;
      if (!o.note.empty())
        oj["note"] = o.note;
      outcomes.push_back(std::move(oj));
      if (o.status == Status::ProvenPass)
        ++pass;
      else if (o.status == Status::ProvenFail)
        ++fail;
      else
        ++evidence;
    }
    row["outcomes"] = std::move(outcomes);
    Json errs = Json::array();
    for (const auto &e : g.errors)
      errs.push_back({{"check", e.check}, {"kind", e.kind}, {"message", e.message}});
    errors += g.errors.size();
    row["errors"] = std::move(errs);
    groups.push_back(std::move(row));
  }
  j["groups"] = std::move(groups);
  j["summary"] = {{"groups", report.groups.size()},
                  {"proven_pass", pass},
                  {"proven_fail", fail},
                  {"evidence", evidence},
                  {"errors", errors},
                  {"result", report.has_proven_failure() ? "fail" : "pass"}};
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport &report)
{
  std::ostringstream out;
  out << "pairs: " << to_string(report.strategy.mode);
  if (report.strategy.mode == PairMode::Sampled)
    out << " (" << report.strategy.sample_count << " samples, seed " << report.strategy.seed << ")";
  out << "\n";
  for (const auto &g : report.groups) {
    out << g.name;
    if (!g.order.empty())
      out << "  [order " << g.order << "]";
    out << "\n";
    for (const auto &o : g.outcomes) {
      out << "  " << to_string(o.status) << "  " << o.theorem_id;
      for (const auto &[k, v] : o.constants)
        out << " " << k << "=" << v;
      if (!o.note.empty())
        out << "  (" << o.note << ")";
      out << "\n";
    }
    for (const auto &e : g.errors)
      out << "  error  " << e.check << ": " << e.kind << ": " << e.message << "\n";
  }
  out << (report.has_proven_failure() ? "FAIL" : "OK") << "\n";
  return out.str();
}

} // namespace nslen
