#include "nslen/structure.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "nslen/error.hpp"
#include "nslen/homomorphism.hpp"

namespace nslen {

namespace {

// Memo entries never hold the group itself (that would make its state own
// a reference to itself); an empty optional stands for "all of G".
using Slot = std::optional<PermGroup>;

Slot wrap(const PermGroup &g, const PermGroup &h)
{
  if (h.order() == g.order())
    return std::nullopt;
  return h;
}

PermGroup unwrap(const PermGroup &g, const Slot &slot) { return slot ? *slot : g; }

template <typename F>
PermGroup memo_subgroup(const PermGroup &g, const std::string &key, F &&compute)
{
  return unwrap(g, g.cached<Slot>(key, [&] { return wrap(g, compute()); }));
}

template <typename F>
std::vector<PermGroup> memo_subgroups(const PermGroup &g, const std::string &key, F &&compute)
{
  auto slots = g.cached<std::vector<Slot>>(key, [&] {
    std::vector<Slot> out;
    for (const auto &h : compute())
      out.push_back(wrap(g, h));
    return out;
  });
  std::vector<PermGroup> out;
  out.reserve(slots.size());
  for (const auto &s : slots)
    out.push_back(unwrap(g, s));
  return out;
}

void check_degree(const PermGroup &a, const PermGroup &b, const char *op)
{
  if (a.degree() != b.degree())
    throw Error(ErrorKind::DegreeMismatch, std::string(op) + ": groups of different degree");
}

bool is_abelian(const PermGroup &g)
{
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
    }
  }
  return true;
}

/// Closure of `start` under conjugation by the generators of G.
PermGroup conjugation_closure(const PermGroup &g, const std::vector<Permutation> &start)
{
  StabilizerChain chain(g.degree());
  std::vector<Permutation> gens;
  for (const auto &s : start) {
    if (chain.extend(s))
      gens.push_back(s);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto &t : g.generators()) {
      Permutation c = gens[i].conjugate_by(t);
      if (chain.extend(c))
        gens.push_back(std::move(c));
    }
  }
  return PermGroup(g.degree(), std::move(gens), std::move(chain));
}

/// Drops later entries equal to earlier ones.
std::vector<PermGroup> deduplicate(const std::vector<PermGroup> &groups)
{
  std::vector<PermGroup> out;
  for (const auto &h : groups) {
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const PermGroup &k) { return same_subgroup(h, k); });
    if (!seen)
      out.push_back(h);
  }
  return out;
}

} // namespace

const char *to_string(LayerLabel label)
{
  switch (label) {
  case LayerLabel::Soluble:
    return "soluble";
  case LayerLabel::Semisimple:
    return "semisimple";
  case LayerLabel::Nilpotent:
    return "nilpotent";
  case LayerLabel::GeneralizedFitting:
    return "generalized-fitting";
  case LayerLabel::TStep:
    return "T-step";
  case LayerLabel::KStep:
    return "K-step";
  }
  return "?";
}

bool SeriesReport::reaches_trivial() const
{
  if (terms.empty())
    return false;
  return direction == Direction::Descending ? terms.back().is_trivial()
                                            : terms.front().is_trivial();
}

std::vector<BigInt> SeriesReport::orders() const
{
  std::vector<BigInt> out;
  for (const auto &t : terms)
    out.push_back(t.order());
  return out;
}

PermGroup normal_closure(const PermGroup &g, const std::vector<Permutation> &s)
{
  for (const auto &x : s) {
    if (!g.contains(x))
      throw Error(ErrorKind::NotInGroup, "normal closure: " + x.to_string() + " is not in G");
  }
  return conjugation_closure(g, s);
}

PermGroup normal_closure(const PermGroup &g, const PermGroup &h)
{
  check_degree(g, h, "normal closure");
  return normal_closure(g, h.generators());
}

PermGroup commutator_subgroup(const PermGroup &a, const PermGroup &b)
{
  check_degree(a, b, "commutator subgroup");
  std::vector<Permutation> comms;
  for (const auto &x : a.generators()) {
    for (const auto &y : b.generators())
      comms.push_back(commutator(x, y));
  }
  return conjugation_closure(join(a, b), comms);
}

SeriesReport derived_series(const PermGroup &g)
{
  SeriesReport r;
  r.terms.push_back(g);
  while (!r.terms.back().is_trivial()) {
    const auto &cur = r.terms.back();
    PermGroup next = commutator_subgroup(cur, cur);
    if (next.order() == cur.order())
      break;
    r.terms.push_back(std::move(next));
    r.labels.push_back(LayerLabel::Soluble);
  }
  r.value = r.length();
  return r;
}

bool is_soluble(const PermGroup &g)
{
  return g.cached<bool>("soluble", [&] { return derived_series(g).reaches_trivial(); });
}

SeriesReport lower_central_series(const PermGroup &g)
{
  SeriesReport r;
  r.terms.push_back(g);
  while (!r.terms.back().is_trivial()) {
    const auto &cur = r.terms.back();
    std::vector<Permutation> comms;
    for (const auto &x : cur.generators()) {
      for (const auto &y : g.generators())
        comms.push_back(commutator(x, y));
    }
    PermGroup next = conjugation_closure(g, comms);
    if (next.order() == cur.order())
      break;
    r.terms.push_back(std::move(next));
    r.labels.push_back(LayerLabel::Nilpotent);
  }
  r.value = r.length();
  return r;
}

bool is_nilpotent(const PermGroup &g)
{
  return g.cached<bool>("nilpotent", [&] { return lower_central_series(g).reaches_trivial(); });
}

bool is_perfect(const PermGroup &g)
{
  return g.cached<bool>("perfect",
                        [&] { return commutator_subgroup(g, g).order() == g.order(); });
}

PermGroup perfect_core(const PermGroup &g)
{
  return memo_subgroup(g, "perfect_core", [&] { return derived_series(g).terms.back(); });
}

PermGroup centralizer(const PermGroup &g, const PermGroup &h, const Limits &limits)
{
  check_degree(g, h, "centralizer");
  g.require_enumerable(limits, "centralizer");
  std::vector<Permutation> found;
  for (const auto &x : g.elements(limits)) {
    bool commutes = std::all_of(h.generators().begin(), h.generators().end(),
                                [&](const Permutation &y) { return x * y == y * x; });
    if (commutes)
      found.push_back(x);
  }
  return generate(g.degree(), found);
}

PermGroup centre(const PermGroup &g, const Limits &limits)
{
  return memo_subgroup(g, "centre", [&] { return centralizer(g, g, limits); });
}

PermGroup intersection(const PermGroup &a, const PermGroup &b, const Limits &limits)
{
  check_degree(a, b, "intersection");
  const PermGroup &small = a.order() <= b.order() ? a : b;
  const PermGroup &big = a.order() <= b.order() ? b : a;
  if (big.contains(small))
    return small;
  small.require_enumerable(limits, "intersection");
  std::vector<Permutation> found;
  for (const auto &x : small.elements(limits)) {
    if (big.contains(x))
      found.push_back(x);
  }
  return generate(a.degree(), found);
}

PermGroup join(const PermGroup &a, const PermGroup &b)
{
  check_degree(a, b, "join");
  if (a.contains(b))
    return a;
  if (b.contains(a))
    return b;
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generate(a.degree(), gens);
}

std::vector<PermGroup> class_closures(const PermGroup &g, const Limits &limits)
{
  g.require_enumerable(limits, "class closures");
  return memo_subgroups(g, "class_closures", [&] {
    std::vector<PermGroup> out;
    for (const auto &x : g.class_representatives(limits))
      out.push_back(conjugation_closure(g, {x}));
    return out;
  });
}

bool is_simple(const PermGroup &g, const Limits &limits)
{
  if (g.is_trivial())
    return false;
  g.require_enumerable(limits, "simplicity test");
  auto closures = class_closures(g, limits);
  for (std::size_t i = 1; i < closures.size(); ++i) {
    if (closures[i].order() != g.order())
      return false;
  }
  return true;
}

bool is_nonabelian_simple(const PermGroup &g, const Limits &limits)
{
  return is_simple(g, limits) && !is_abelian(g);
}

bool is_quasisimple(const PermGroup &g, const Limits &limits)
{
  if (g.is_trivial())
    return false;
  g.require_enumerable(limits, "quasisimplicity test");
  return g.cached<bool>("quasisimple", [&] {
    if (!is_perfect(g))
      return false;
    auto hom = quotient_group(g, centre(g, limits), limits);
    return is_nonabelian_simple(hom.image(), limits);
  });
}

PermGroup soluble_radical(const PermGroup &g, const Limits &limits)
{
  g.require_enumerable(limits, "soluble radical");
  return memo_subgroup(g, "soluble_radical", [&] {
    PermGroup r = PermGroup::trivial(g.degree());
    for (const auto &c : class_closures(g, limits)) {
      if (!r.contains(c) && is_soluble(c))
        r = join(r, c);
    }
    return r;
  });
}

PermGroup fitting_subgroup(const PermGroup &g, const Limits &limits)
{
  g.require_enumerable(limits, "Fitting subgroup");
  return memo_subgroup(g, "fitting", [&] {
    PermGroup f = PermGroup::trivial(g.degree());
    for (const auto &c : class_closures(g, limits)) {
      if (!f.contains(c) && is_nilpotent(c))
        f = join(f, c);
    }
    return f;
  });
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g, const Limits &limits)
{
  if (g.is_trivial())
    throw Error(ErrorKind::TrivialGroup, "the trivial group has no minimal normal subgroups");
  g.require_enumerable(limits, "minimal normal subgroups");
  return memo_subgroups(g, "minimal_normals", [&] {
    auto closures = class_closures(g, limits);
    closures.erase(closures.begin()); // identity
    std::vector<PermGroup> out;
    for (const auto &c : deduplicate(closures)) {
      bool minimal = std::none_of(closures.begin(), closures.end(), [&](const PermGroup &d) {
        return d.order() < c.order() && c.contains(d);
      });
      if (minimal)
        out.push_back(c);
    }
    return out;
  });
}

PermGroup socle(const PermGroup &g, const Limits &limits)
{
  auto mins = minimal_normal_subgroups(g, limits);
  return memo_subgroup(g, "socle", [&] {
    PermGroup s = PermGroup::trivial(g.degree());
    for (const auto &m : mins)
      s = join(s, m);
    return s;
  });
}

PermGroup subnormal_closure(const PermGroup &g, const Permutation &x)
{
  if (!g.contains(x))
    throw Error(ErrorKind::NotInGroup, "subnormal closure: " + x.to_string() + " is not in G");
  PermGroup h = g;
  for (;;) {
    PermGroup next = conjugation_closure(h, {x});
    if (next.order() == h.order())
      return h;
    h = std::move(next);
  }
}

ComponentSet components(const PermGroup &g, const Limits &limits)
{
  g.require_enumerable(limits, "components");
  auto list = memo_subgroups(g, "components", [&] {
    std::vector<PermGroup> found;
    auto add = [&](const PermGroup &k) {
      for (const auto &q : found) {
        if (same_subgroup(q, k))
          return false;
      }
      found.push_back(k);
      return true;
    };
    // Class representatives reach one component per conjugacy class of
    // components; conjugating by G supplies the rest.
    const auto &reps = g.class_representatives(limits);
    for (std::size_t i = 1; i < reps.size(); ++i) {
      PermGroup k = subnormal_closure(g, reps[i]);
      if (is_quasisimple(k, limits))
        add(k);
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (const auto &t : g.generators()) {
        std::vector<Permutation> conj;
        for (const auto &s : found[i].generators())
          conj.push_back(s.conjugate_by(t));
        add(PermGroup(g.degree(), std::move(conj)));
      }
    }
    auto key = [](const PermGroup &q) {
      return std::pair(q.order(), q.generators().front().first_moved_point());
    };
    std::stable_sort(found.begin(), found.end(),
                     [&](const PermGroup &a, const PermGroup &b) { return key(a) < key(b); });
    return found;
  });
  PermGroup layer = PermGroup::trivial(g.degree());
  for (const auto &q : list)
    layer = join(layer, q);
  return ComponentSet{std::move(list), std::move(layer)};
}

PermGroup generalized_fitting_subgroup(const PermGroup &g, const Limits &limits)
{
  g.require_enumerable(limits, "generalized Fitting subgroup");
  return memo_subgroup(g, "generalized_fitting", [&] {
    return join(fitting_subgroup(g, limits), components(g, limits).layer);
  });
}

std::vector<PermGroup> normal_subgroups(const PermGroup &g, const Limits &limits)
{
  g.require_small(limits, "normal subgroup lattice");
  return memo_subgroups(g, "normal_subgroups", [&] {
    std::vector<PermGroup> found;
    std::multimap<std::pair<BigInt, std::uint64_t>, std::size_t> index;
    auto add = [&](const PermGroup &n) {
      auto key = std::pair(n.order(), n.fingerprint(limits));
      auto [lo, hi] = index.equal_range(key);
      for (auto it = lo; it != hi; ++it) {
        if (same_subgroup(found[it->second], n))
          return;
      }
      if (found.size() >= limits.lattice_cap)
        throw LatticeCapExceeded("normal subgroup lattice exceeds " +
                                 std::to_string(limits.lattice_cap) + " subgroups");
      index.emplace(key, found.size());
      found.push_back(n);
    };
    add(PermGroup::trivial(g.degree()));
    for (const auto &c : class_closures(g, limits))
      add(c);
    for (std::size_t i = 1; i < found.size(); ++i) {
      for (std::size_t j = 1; j < i; ++j) {
        if (found[i].contains(found[j]) || found[j].contains(found[i]))
          continue;
        add(join(found[i], found[j]));
      }
    }
    std::stable_sort(found.begin(), found.end(), [](const PermGroup &a, const PermGroup &b) {
      return a.order() < b.order();
    });
    return found;
  });
}

namespace {

bool extends_to_generating_tuple(const PermGroup &g, const std::vector<Permutation> &elems,
                                 const StabilizerChain &chain, std::size_t remaining)
{
  if (chain.order() == g.order())
    return true;
  if (remaining == 0)
    return false;
  for (const auto &y : elems) {
    if (chain.contains(y))
      continue;
    StabilizerChain next = chain;
    next.extend(y);
    if (extends_to_generating_tuple(g, elems, next, remaining - 1))
      return true;
  }
  return false;
}

} // namespace

std::size_t minimal_generator_count(const PermGroup &g, const Limits &limits)
{
  g.require_small(limits, "minimal generator count");
  if (g.is_trivial())
    return 0;
  return g.cached<std::size_t>("d", [&] {
    const auto &elems = g.elements(limits);
    const auto &reps = g.class_representatives(limits);
    for (std::size_t k = 1;; ++k) {
      for (std::size_t i = 1; i < reps.size(); ++i) {
        StabilizerChain chain(g.degree());
        chain.extend(reps[i]);
        if (extends_to_generating_tuple(g, elems, chain, k - 1))
          return k;
      }
    }
  });
}

} // namespace nslen
