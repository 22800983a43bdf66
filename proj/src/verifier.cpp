#include "nslen/verifier.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "nslen/catalog.hpp"
#include "nslen/error.hpp"
#include "nslen/homomorphism.hpp"
#include "nslen/invariants.hpp"
#include "nslen/structure.hpp"

namespace nslen {

const char *to_string(PairMode mode)
{
  return mode == PairMode::Exhaustive ? "exhaustive" : "sampled";
}

const char *to_string(Status status)
{
  switch (status) {
  case Status::ProvenPass:
    return "proven-check-pass";
  case Status::ProvenFail:
    return "proven-check-FAIL";
  case Status::EvidenceConsistent:
    return "evidence-consistent";
  case Status::EvidenceCounterexample:
    return "evidence-COUNTEREXAMPLE";
  case Status::EvidenceInconclusive:
    return "evidence-inconclusive";
  }
  return "?";
}

bool is_proven(Status status)
{
  return status == Status::ProvenPass || status == Status::ProvenFail;
}

namespace {

struct SubgroupStats {
  bool soluble = true;
  std::size_t lambda = 0;
  std::size_t h_star = 0; // equals the Fitting height when soluble
};

/// Invariants of pair-generated subgroups, computed once per distinct
/// subgroup. Buckets are keyed by order and orbit partition.
class SubgroupTable {
public:
  SubgroupTable(const PermGroup &g, const Limits &limits) : g_(g), limits_(limits) {}

  const SubgroupStats &stats(const PermGroup &h)
  {
    if (h.order() == g_.order())
      return lookup(g_);
    return lookup(h);
  }

private:
  using Key = std::tuple<BigInt, std::vector<Point>>;

  static std::vector<Point> orbit_signature(const PermGroup &h)
  {
    std::vector<Point> root(h.degree());
    for (Point i = 0; i < root.size(); ++i)
      root[i] = i;
    auto find = [&](Point i) {
      while (root[i] != i)
        i = root[i] = root[root[i]];
      return i;
    };
    for (const auto &gen : h.generators()) {
      for (Point i = 0; i < root.size(); ++i) {
        Point a = find(i), b = find(gen[i]);
        if (a != b)
          root[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Point i = 0; i < root.size(); ++i)
      root[i] = find(i);
    return root;
  }

  const SubgroupStats &lookup(const PermGroup &h)
  {
    auto &bucket = table_[Key{h.order(), orbit_signature(h)}];
    for (const auto &[known, s] : bucket) {
      if (same_subgroup(known, h))
        return s;
    }
    SubgroupStats s;
    s.soluble = is_soluble(h);
    if (s.soluble) {
      s.h_star = fitting_height(h, limits_);
    } else {
      s.lambda = nonsoluble_length(h, limits_);
      s.h_star = h_star(h, limits_);
    }
    bucket.emplace_back(h, s);
    return bucket.back().second;
  }

  const PermGroup &g_;
  const Limits &limits_;
  std::map<Key, std::deque<std::pair<PermGroup, SubgroupStats>>> table_;
};

/// Orbit representatives (least index) of <gens> acting by conjugation on
/// the elements whose indices are listed.
std::vector<std::size_t> conjugation_orbit_reps(const PermGroup &g,
                                                const std::vector<Permutation> &gens,
                                                const std::vector<std::size_t> &domain,
                                                const Limits &limits)
{
  const auto &elems = g.elements(limits);
  std::vector<char> seen(elems.size(), 0);
  std::vector<std::size_t> reps;
  for (std::size_t start : domain) {
    if (seen[start])
      continue;
    reps.push_back(start);
    seen[start] = 1;
    std::vector<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t i = queue.back();
      queue.pop_back();
      for (const auto &c : gens) {
        std::size_t j = g.element_index(elems[i].conjugate_by(c), limits);
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
      }
    }
  }
  return reps;
}

std::string profile_key(const char *kind, PairMode mode, const PairStrategy &s)
{
  std::ostringstream out;
  out << kind << ':' << to_string(mode);
  if (mode == PairMode::Sampled)
    out << ':' << s.sample_count << ':' << s.seed;
  return out.str();
}

std::vector<std::string> words(const std::vector<Permutation> &gens)
{
  std::vector<std::string> out;
  for (const auto &p : gens)
    out.push_back(p.to_string());
  return out;
}

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

void add_scan_constants(TheoremOutcome &o, const PairProfile &p, const PairStrategy &s)
{
  o.constants.emplace_back("pairs", as_int(p.pairs));
  o.constants.emplace_back("sampled", p.mode == PairMode::Sampled ? 1 : 0);
  if (p.mode == PairMode::Sampled)
    o.constants.emplace_back("seed", static_cast<std::int64_t>(s.seed));
}

std::size_t lambda_of_quotient(const PermGroup &g, const PermGroup &n, const Limits &limits)
{
  return nonsoluble_length(quotient_group(g, n, limits).image(), limits);
}

} // namespace

PairProfile two_generated_lambda_profile(const PermGroup &g, const PairStrategy &strategy,
                                         const Limits &limits)
{
  PairMode mode = strategy.mode;
  if (mode == PairMode::Exhaustive) {
    g.require_enumerable(limits, "exhaustive two-generator scan");
    if (g.order() > strategy.exhaustive_cap)
      mode = PairMode::Sampled;
  }
  return g.cached<PairProfile>(profile_key("two_generator", mode, strategy), [&] {
    PairProfile p;
    p.mode = mode;
    SubgroupTable table(g, limits);
    bool first = true;
    auto visit = [&](const Permutation &x, const Permutation &y) {
      ++p.pairs;
      PermGroup h(g.degree(), {x, y});
      const SubgroupStats &s = table.stats(h);
      if (first || s.lambda > p.k) {
        p.k = s.lambda;
        p.witness = {x, y};
      }
      if (first || s.h_star > p.max_h_star) {
        p.max_h_star = s.h_star;
        p.h_star_witness = {x, y};
      }
      if (s.soluble)
        p.soluble_heights.try_emplace(s.h_star, std::vector<Permutation>{x, y});
      first = false;
    };
    if (mode == PairMode::Exhaustive) {
      const auto &elems = g.elements(limits);
      std::vector<std::size_t> all(elems.size());
      for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
      for (const auto &x : g.class_representatives(limits)) {
        PermGroup c = centralizer(g, PermGroup(g.degree(), {x}), limits);
        for (std::size_t j : conjugation_orbit_reps(g, c.generators(), all, limits))
          visit(x, elems[j]);
      }
    } else {
      std::mt19937_64 rng(strategy.seed);
      for (std::size_t i = 0; i < strategy.sample_count; ++i) {
        Permutation x = g.random_element(rng());
        Permutation y = g.random_element(rng());
        visit(x, y);
      }
    }
    return p;
  });
}

PairProfile conjugate_pair_profile(const PermGroup &g, const PairStrategy &strategy,
                                   const Limits &limits)
{
  PairMode mode = strategy.mode;
  if (mode == PairMode::Exhaustive)
    g.require_enumerable(limits, "exhaustive conjugate-pair scan");
  return g.cached<PairProfile>(profile_key("conjugate_pair", mode, strategy), [&] {
    PairProfile p;
    p.mode = mode;
    SubgroupTable table(g, limits);
    bool first = true;
    auto visit = [&](const Permutation &x, const Permutation &y) {
      ++p.pairs;
      PermGroup h(g.degree(), {x, y});
      const SubgroupStats &s = table.stats(h);
      if (!s.soluble)
        return;
      if (first || s.h_star > p.k) {
        p.k = s.h_star;
        p.witness = {x, y};
      }
      p.soluble_heights.try_emplace(s.h_star, std::vector<Permutation>{x, y});
      first = false;
    };
    if (mode == PairMode::Exhaustive) {
      const auto &elems = g.elements(limits);
      const auto &class_of = g.class_of(limits);
      const auto &reps = g.class_representatives(limits);
      std::vector<std::vector<std::size_t>> members(reps.size());
      for (std::size_t i = 0; i < elems.size(); ++i)
        members[class_of[i]].push_back(i);
      for (std::size_t c = 0; c < reps.size(); ++c) {
        const Permutation &x = reps[c];
        PermGroup cx = centralizer(g, PermGroup(g.degree(), {x}), limits);
        for (std::size_t j : conjugation_orbit_reps(g, cx.generators(), members[c], limits))
          visit(x, elems[j]);
      }
    } else {
      std::mt19937_64 rng(strategy.seed);
      for (std::size_t i = 0; i < strategy.sample_count; ++i) {
        Permutation x = g.random_element(rng());
        Permutation t = g.random_element(rng());
        visit(x, x.conjugate_by(t));
      }
    }
    return p;
  });
}

std::vector<TheoremOutcome> verify_theorem_A(const PermGroup &g, const PairStrategy &strategy,
                                             const Limits &limits)
{
  PairProfile p = two_generated_lambda_profile(g, strategy, limits);
  std::size_t lambda = nonsoluble_length(g, limits);
  std::size_t hs = h_star(g, limits);
  bool exhaustive = p.mode == PairMode::Exhaustive;

  TheoremOutcome a;
  a.theorem_id = "two_generator_lambda";
  a.constants = {{"lambda", as_int(lambda)}, {"k_max", as_int(p.k)}};
  add_scan_constants(a, p, strategy);
  a.witness.push_back(words(p.witness));
  if (exhaustive) {
    a.status = lambda == p.k ? Status::ProvenPass : Status::ProvenFail;
  } else {
    // a subgroup never has larger nonsoluble length
    a.status = lambda >= p.k ? Status::ProvenPass : Status::ProvenFail;
    a.note = lambda == p.k ? "sampled: maximum attained" : "sampled: maximum not attained";
  }

  TheoremOutcome b;
  b.theorem_id = "two_generator_h_star";
  b.constants = {{"h_star", as_int(hs)}, {"max_two_generator_h_star", as_int(p.max_h_star)}};
  add_scan_constants(b, p, strategy);
  b.witness.push_back(words(p.h_star_witness));
  if (hs <= p.max_h_star)
    b.status = Status::EvidenceConsistent;
  else
    b.status = exhaustive ? Status::EvidenceCounterexample : Status::EvidenceInconclusive;
  return {a, b};
}

std::vector<TheoremOutcome> verify_theorem_C(const PermGroup &g, const PairStrategy &strategy,
                                             const Limits &limits)
{
  PairProfile p = conjugate_pair_profile(g, strategy, limits);
  std::size_t hs = h_star(g, limits);
  bool exhaustive = p.mode == PairMode::Exhaustive;
  // (k+1)2^k - 1; k stays tiny for anything enumerable
  std::int64_t bound = (as_int(p.k) + 1) * (std::int64_t{1} << p.k) - 1;

  TheoremOutcome a;
  a.theorem_id = "conjugate_pair_h_star_bound";
  a.constants = {{"h_star", as_int(hs)}, {"k", as_int(p.k)}, {"bound", bound}};
  add_scan_constants(a, p, strategy);
  a.witness.push_back(words(p.witness));
  // the bound grows with k, so a sampled k that satisfies it is conclusive
  if (as_int(hs) <= bound)
    a.status = Status::ProvenPass;
  else
    a.status = exhaustive ? Status::ProvenFail : Status::EvidenceInconclusive;

  TheoremOutcome b;
  b.theorem_id = "conjugate_pair_h_star_conjecture";
  b.constants = {{"h_star", as_int(hs)}, {"k", as_int(p.k)}};
  add_scan_constants(b, p, strategy);
  b.witness.push_back(words(p.witness));
  if (hs <= p.k)
    b.status = Status::EvidenceConsistent;
  else
    b.status = exhaustive ? Status::EvidenceCounterexample : Status::EvidenceInconclusive;
  return {a, b};
}

TheoremOutcome verify_height_lemma(const PermGroup &g, const PairStrategy &strategy,
                                   const Limits &limits)
{
  PairProfile p = conjugate_pair_profile(g, strategy, limits);
  std::size_t lambda = nonsoluble_length(g, limits);
  std::size_t hs = h_star(g, limits);
  std::int64_t scale = std::int64_t{1} << lambda;

  TheoremOutcome o;
  o.theorem_id = "soluble_subgroup_height_bound";
  o.constants = {{"lambda", as_int(lambda)}, {"h_star", as_int(hs)}, {"k", as_int(p.k)}};
  add_scan_constants(o, p, strategy);
  o.witness.push_back(words(p.witness));
  // k >= (h+1-2^lambda)/2^lambda, cleared of the denominator
  if (as_int(p.k) * scale >= as_int(hs) + 1 - scale)
    o.status = Status::ProvenPass;
  else
    o.status = p.mode == PairMode::Exhaustive ? Status::ProvenFail : Status::EvidenceInconclusive;
  return o;
}

std::vector<TheoremOutcome> verify_soluble_theorems(const PermGroup &g,
                                                    const PairStrategy &strategy,
                                                    const Limits &limits)
{
  PairProfile p = conjugate_pair_profile(g, strategy, limits);
  std::size_t lambda = nonsoluble_length(g, limits);
  std::size_t hs = h_star(g, limits);
  bool exhaustive = p.mode == PairMode::Exhaustive;
  Status miss = exhaustive ? Status::ProvenFail : Status::EvidenceInconclusive;
  std::vector<TheoremOutcome> out;

  if (is_soluble(g)) {
    std::size_t h = fitting_height(g, limits);
    TheoremOutcome a;
    a.theorem_id = "conjugate_pair_fitting_height";
    a.constants = {{"h", as_int(h)}, {"k", as_int(p.k)}};
    add_scan_constants(a, p, strategy);
    a.witness.push_back(words(p.witness));
    a.status = p.k == h ? Status::ProvenPass : miss;
    out.push_back(std::move(a));
  }

  TheoremOutcome b;
  b.theorem_id = "lambda_below_soluble_height";
  b.constants = {{"lambda", as_int(lambda)}, {"k", as_int(p.k)}};
  add_scan_constants(b, p, strategy);
  b.witness.push_back(words(p.witness));
  b.status = lambda <= p.k ? Status::ProvenPass : miss;
  out.push_back(std::move(b));

  // soluble subgroups met by either scan
  auto heights = p.soluble_heights;
  if (exhaustive || g.order() <= strategy.exhaustive_cap) {
    for (const auto &[h, w] : two_generated_lambda_profile(g, strategy, limits).soluble_heights)
      heights.try_emplace(h, w);
  }
  TheoremOutcome c;
  c.theorem_id = "soluble_subgroup_attaining_h_star";
  c.constants = {{"h_star", as_int(hs)},
                 {"max_soluble_height_found", as_int(heights.empty() ? 0 : heights.rbegin()->first)}};
  add_scan_constants(c, p, strategy);
  if (auto it = heights.find(hs); it != heights.end()) {
    c.status = Status::EvidenceConsistent;
    c.witness.push_back(words(it->second));
  } else {
    c.status = Status::EvidenceInconclusive;
    c.note = "no such subgroup among pair-generated subgroups; this does not refute existence";
  }
  out.push_back(std::move(c));
  return out;
}

TheoremOutcome verify_series_laws(const PermGroup &g, const Limits &limits)
{
  g.require_small(limits, "series laws");
  TheoremOutcome o;
  o.theorem_id = "series_laws";
  std::size_t checks = 0;
  std::vector<std::string> failed;
  auto check = [&](bool ok, const char *law) {
    ++checks;
    if (!ok && (failed.empty() || failed.back() != law))
      failed.emplace_back(law);
  };

  SeriesReport fs = generalized_fitting_series(g, limits);
  SeriesReport ks = k_series(g, limits);
  SeriesReport ts = t_series(g, limits);
  std::size_t h = fs.value;
  std::size_t lambda = nonsoluble_length(g, limits);
  PermGroup trivial = PermGroup::trivial(g.degree());

  for (std::size_t i = 1; i <= h + 1; ++i) {
    const PermGroup &k = i <= ks.terms.size() ? ks.terms[i - 1] : trivial;
    check(fs.terms[h - i + 1].contains(k), "k_inclusion");
    if (!k.is_trivial())
      check(h + 1 == i + h_star(k, limits), "k_height");
  }
  for (std::size_t i = 0; i <= h; ++i)
    check(h == i + h_star(quotient_group(g, fs.terms[i], limits).image(), limits),
          "h_star_additivity");

  std::size_t top = lambda_of_quotient(g, ts.terms.size() > 1 ? ts.terms[1] : trivial, limits);
  check(top == (lambda == 0 ? 0u : 1u), "t_quotient");
  for (std::size_t i = 0; i + 1 < ts.terms.size(); ++i) {
    // T_1 = G is perfect only when G is; the layer claims start at T_2
    if (i == 0 && lambda == 0)
      continue;
    if (i > 0)
      check(is_perfect(ts.terms[i]), "t_perfect");
    check(lambda_of_quotient(ts.terms[i], ts.terms[i + 1], limits) == 1, "t_layer");
  }
  for (std::size_t n = 1; n <= lambda; ++n)
    check(lambda - n < ts.terms.size() && nonsoluble_length(ts.terms[lambda - n], limits) == n,
          "t_realization");

  std::vector<PermGroup> good;
  auto lattice = normal_subgroups(g, limits);
  for (const auto &n : lattice) {
    if (lambda_of_quotient(g, n, limits) <= 1)
      good.push_back(n);
  }
  for (std::size_t i = 0; i < good.size(); ++i) {
    for (std::size_t j = i + 1; j < good.size(); ++j)
      check(lambda_of_quotient(g, intersection(good[i], good[j], limits), limits) <= 1,
            "intersection_closure");
  }

  o.constants = {{"lambda", as_int(lambda)},
                 {"h_star", as_int(h)},
                 {"t_series_length", as_int(ts.length())},
                 {"k_series_length", as_int(ks.length())},
                 {"normal_subgroups", as_int(lattice.size())},
                 {"checks", as_int(checks)},
                 {"failures", as_int(failed.size())}};
  o.status = failed.empty() ? Status::ProvenPass : Status::ProvenFail;
  for (const auto &f : failed)
    o.note += (o.note.empty() ? "failed: " : ", ") + f;
  return o;
}

std::vector<TheoremOutcome> verify_structure_lemmas(const PermGroup &g, const Limits &limits)
{
  g.require_small(limits, "structure lemmas");
  std::size_t lambda = nonsoluble_length(g, limits);
  std::vector<PermGroup> semisimple;
  if (lambda > 0) {
    for (const auto &n : normal_subgroups(g, limits)) {
      if (is_semisimple(n, limits))
        semisimple.push_back(n);
    }
  }

  TheoremOutcome a;
  a.theorem_id = "factor_action_soluble";
  std::size_t instances = 0, bad = 0;
  if (lambda == 1) {
    for (const auto &n : semisimple) {
      auto d = semisimple_factors(n, limits);
      PermGroup image = kernel_of_action_on_factors(g, d.factors, limits).image();
      ++instances;
      if (!is_soluble(image)) {
        ++bad;
        a.witness.push_back(words(n.generators()));
      }
    }
  }
  a.constants = {{"lambda", as_int(lambda)}, {"instances", as_int(instances)}};
  a.status = bad == 0 ? Status::ProvenPass : Status::ProvenFail;
  if (lambda != 1)
    a.note = "not applicable";

  TheoremOutcome b;
  b.theorem_id = "semisimple_centralizer_nontrivial";
  instances = bad = 0;
  for (const auto &n : semisimple) {
    if (lambda_of_quotient(g, n, limits) != lambda)
      continue;
    ++instances;
    if (centralizer(g, n, limits).is_trivial()) {
      ++bad;
      b.witness.push_back(words(n.generators()));
    }
  }
  b.constants = {{"lambda", as_int(lambda)}, {"instances", as_int(instances)}};
  b.status = bad == 0 ? Status::ProvenPass : Status::ProvenFail;
  if (instances == 0)
    b.note = "not applicable";

  TheoremOutcome c;
  c.theorem_id = "unique_minimal_normal_generators";
  c.status = Status::ProvenPass;
  c.note = "not applicable";
  if (!g.is_trivial()) {
    auto mins = minimal_normal_subgroups(g, limits);
    if (mins.size() == 1) {
      PermGroup q = quotient_group(g, mins[0], limits).image();
      std::size_t dq = minimal_generator_count(q, limits);
      if (dq > 1) {
        std::size_t dg = minimal_generator_count(g, limits);
        c.constants = {{"d_group", as_int(dg)}, {"d_quotient", as_int(dq)}};
        c.witness.push_back(words(mins[0].generators()));
        c.status = dg == dq ? Status::ProvenPass : Status::ProvenFail;
        c.note.clear();
      }
    }
  }
  return {a, b, c};
}

bool GroupVerification::has_proven_failure() const
{
  for (const auto &o : outcomes) {
    if (o.status == Status::ProvenFail)
      return true;
  }
  for (const auto &e : errors) {
    if (e.kind == "Internal")
      return true;
  }
  return false;
}

bool GroupVerification::has_tier_error() const
{
  for (const auto &e : errors) {
    if (e.kind == to_string(ErrorKind::TierExceeded) ||
        e.kind == to_string(ErrorKind::LatticeCapExceeded))
      return true;
  }
  return false;
}

bool VerificationReport::has_proven_failure() const
{
  for (const auto &g : groups) {
    if (g.has_proven_failure())
      return true;
  }
  return false;
}

bool VerificationReport::has_tier_error() const
{
  for (const auto &g : groups) {
    if (g.has_tier_error())
      return true;
  }
  return false;
}

GroupVerification verify_group(const std::string &name, const std::string &spec,
                               const PairStrategy &strategy, const Limits &limits)
{
  GroupVerification row;
  row.name = name;
  row.spec = spec;
  while (!row.spec.empty() && std::isspace(static_cast<unsigned char>(row.spec.back())))
    row.spec.pop_back();
  PermGroup g;
  try {
    g = parse_group_spec(spec);
    row.order = to_string(g.order());
  } catch (const Error &e) {
    row.errors.push_back({"parse", to_string(e.kind()), e.what()});
    return row;
  }

  auto run = [&](const char *check, auto body) {
    try {
      body();
    } catch (const Error &e) {
      row.errors.push_back({check, to_string(e.kind()), e.what()});
    } catch (const std::exception &e) {
      row.errors.push_back({check, "Internal", e.what()});
    }
  };
  auto append = [&](std::vector<TheoremOutcome> v) {
    for (auto &o : v)
      row.outcomes.push_back(std::move(o));
  };
  run("two_generator", [&] { append(verify_theorem_A(g, strategy, limits)); });
  run("conjugate_pair", [&] { append(verify_theorem_C(g, strategy, limits)); });
  run("height_lemma", [&] { row.outcomes.push_back(verify_height_lemma(g, strategy, limits)); });
  run("soluble_theorems", [&] { append(verify_soluble_theorems(g, strategy, limits)); });
  run("series_laws", [&] { row.outcomes.push_back(verify_series_laws(g, limits)); });
  run("structure_lemmas", [&] { append(verify_structure_lemmas(g, limits)); });
  return row;
}

VerificationReport run_corpus(const std::vector<CorpusEntry> &corpus,
                              const PairStrategy &strategy, const Limits &limits)
{
  VerificationReport report;
  report.strategy = strategy;
  for (const auto &entry : corpus)
    report.groups.push_back(verify_group(entry.name, entry.text, strategy, limits));
  return report;
}

} // namespace nslen
