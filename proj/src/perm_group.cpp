#include "nslen/perm_group.hpp"

#include <algorithm>
#include <random>

#include "nslen/error.hpp"

namespace nslen {

namespace {

std::string order_text(const PermGroup &g)
{
  return to_string(g.order());
}

} // namespace

std::string to_string(const BigInt &n) { return n.str(); }

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
  : state_(std::make_shared<State>())
{
  if (degree == 0)
    throw Error(ErrorKind::InvalidArgument, "a permutation group needs at least one point");
  state_->degree = degree;
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) +
                    " in a group of degree " + std::to_string(degree));
    if (!g.is_identity())
      state_->generators.push_back(std::move(g));
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     StabilizerChain chain)
  : PermGroup(degree, std::move(generators))
{
  if (chain.degree() != degree)
    throw Error(ErrorKind::DegreeMismatch, "chain degree does not match the group");
  std::call_once(state_->chain_once, [&] {
    state_->chain = std::make_unique<StabilizerChain>(std::move(chain));
  });
}

std::size_t PermGroup::degree() const noexcept { return state_->degree; }

const std::vector<Permutation> &PermGroup::generators() const noexcept
{
  return state_->generators;
}

const StabilizerChain &PermGroup::chain() const
{
  std::call_once(state_->chain_once, [this] {
    auto chain = std::make_unique<StabilizerChain>(state_->degree);
    for (const auto &g : state_->generators)
      chain->extend(g);
    state_->chain = std::move(chain);
  });
  return *state_->chain;
}

BigInt PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation &p) const
{
  if (p.degree() != degree())
    throw Error(ErrorKind::DegreeMismatch,
                "element of degree " + std::to_string(p.degree()) +
                  " tested against a group of degree " + std::to_string(degree()));
  return chain().contains(p);
}

bool PermGroup::contains(const PermGroup &other) const
{
  if (other.degree() != degree())
    throw Error(ErrorKind::DegreeMismatch, "subgroups live on different point sets");
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Permutation &g) { return chain().contains(g); });
}

bool PermGroup::is_enumerable(const Limits &limits) const
{
  return order() <= limits.max_enumerable;
}

bool PermGroup::is_small(const Limits &limits) const { return order() <= limits.max_small; }

void PermGroup::require_enumerable(const Limits &limits, const char *operation) const
{
  if (!is_enumerable(limits))
    throw TierExceeded(std::string(operation) + ": group order " + order_text(*this) +
                       " exceeds the enumeration bound " +
                       std::to_string(limits.max_enumerable));
}

void PermGroup::require_small(const Limits &limits, const char *operation) const
{
  if (!is_small(limits))
    throw TierExceeded(std::string(operation) + ": group order " + order_text(*this) +
                       " exceeds the small-group bound " + std::to_string(limits.max_small));
}

void PermGroup::for_each_element(const std::function<void(const Permutation &)> &visit,
                                 const Limits &limits) const
{
  require_enumerable(limits, "enumerate_elements");
  const auto &c = chain();
  const std::size_t depth = c.length();

  // transversals[l][k] maps base point l to the k-th point of its orbit
  std::vector<std::vector<Permutation>> transversals(depth);
  for (std::size_t l = 0; l < depth; ++l) {
    for (Point beta : c.orbit(l))
      transversals[l].push_back(c.transversal(l, beta));
  }

  // element = u_{depth-1} * ... * u_0, level 0 varying slowest
  std::vector<Permutation> suffix(depth + 1);
  suffix[0] = identity();
  std::vector<std::size_t> pos(depth, 0);
  auto rebuild = [&](std::size_t from) {
    for (std::size_t l = from; l < depth; ++l)
      suffix[l + 1] = transversals[l][pos[l]] * suffix[l];
  };
  rebuild(0);
  for (;;) {
    visit(suffix[depth]);
    std::size_t l = depth;
    while (l > 0) {
      --l;
      if (++pos[l] < transversals[l].size()) {
        rebuild(l);
        break;
      }
      pos[l] = 0;
      if (l == 0)
        return;
    }
    if (depth == 0)
      return;
  }
}

const std::vector<Permutation> &PermGroup::elements(const Limits &limits) const
{
  require_enumerable(limits, "enumerate_elements");
  std::call_once(state_->elements_once, [&] {
    std::vector<Permutation> all;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    for_each_element(
      [&](const Permutation &p) {
        index.emplace(p, static_cast<std::uint32_t>(all.size()));
        all.push_back(p);
      },
      limits);
    state_->index = std::move(index);
    state_->elements = std::move(all);
  });
  return state_->elements;
}

std::size_t PermGroup::element_index(const Permutation &p, const Limits &limits) const
{
  elements(limits);
  auto it = state_->index.find(p);
  if (it == state_->index.end())
    throw Error(ErrorKind::NotInGroup, "element " + p.to_string() + " is not in the group");
  return it->second;
}

const PermGroup::Classes &PermGroup::classes(const Limits &limits) const
{
  require_enumerable(limits, "conjugacy_class_reps");
  std::call_once(state_->classes_once, [&] {
    const auto &all = elements(limits);
    Classes result;
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    result.class_of.assign(all.size(), kUnset);
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (result.class_of[i] != kUnset)
        continue;
      auto id = static_cast<std::uint32_t>(result.reps.size());
      queue.assign(1, i);
      result.class_of[i] = id;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (const auto &g : generators()) {
          auto j = state_->index.at(all[queue[k]].conjugate_by(g));
          if (result.class_of[j] == kUnset) {
            result.class_of[j] = id;
            queue.push_back(j);
          }
        }
      }
      result.reps.push_back(all[i]);
      result.sizes.push_back(queue.size());
    }
    // transversal-product order starts with the identity, so class 0 is {1}
    state_->classes = std::move(result);
  });
  return state_->classes;
}

const std::vector<Permutation> &PermGroup::class_representatives(const Limits &limits) const
{
  return classes(limits).reps;
}

const std::vector<std::size_t> &PermGroup::class_sizes(const Limits &limits) const
{
  return classes(limits).sizes;
}

const std::vector<std::uint32_t> &PermGroup::class_of(const Limits &limits) const
{
  return classes(limits).class_of;
}

Permutation PermGroup::random_element(std::uint64_t seed) const
{
  const auto &c = chain();
  std::mt19937_64 rng(seed);
  Permutation result = identity();
  for (std::size_t l = 0; l < c.length(); ++l) {
    const auto &orbit = c.orbit(l);
    std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
    result = c.transversal(l, orbit[pick(rng)]) * result;
  }
  return result;
}

std::uint64_t PermGroup::fingerprint(const Limits &limits) const
{
  require_enumerable(limits, "fingerprint");
  std::call_once(state_->fingerprint_once, [&] {
    std::uint64_t sum = 0;
    for_each_element([&](const Permutation &p) { sum += p.hash(); }, limits);
    state_->fingerprint = sum;
  });
  return state_->fingerprint;
}

bool same_subgroup(const PermGroup &a, const PermGroup &b)
{
  if (a.same_object(b))
    return true;
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b) && b.contains(a);
}

PermGroup generate(std::size_t degree, std::span<const Permutation> elements)
{
  StabilizerChain chain(degree);
  std::vector<Permutation> gens;
  for (const auto &p : elements) {
    if (chain.extend(p))
      gens.push_back(p);
  }
  return PermGroup(degree, std::move(gens), std::move(chain));
}

const StabilizerChain &stabilizer_chain(const PermGroup &g) { return g.chain(); }

BigInt group_order(const PermGroup &g) { return g.order(); }

bool membership_test(const PermGroup &g, const Permutation &p) { return g.contains(p); }

std::vector<Permutation> enumerate_elements(const PermGroup &g, const Limits &limits)
{
  return g.elements(limits);
}

std::vector<Permutation> conjugacy_class_reps(const PermGroup &g, const Limits &limits)
{
  return g.class_representatives(limits);
}

Permutation random_element(const PermGroup &g, std::uint64_t seed)
{
  return g.random_element(seed);
}

} // namespace nslen
