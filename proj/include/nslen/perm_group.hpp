#ifndef NSLEN_PERM_GROUP_HPP
#define NSLEN_PERM_GROUP_HPP

#include <any>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nslen/limits.hpp"
#include "nslen/permutation.hpp"
#include "nslen/stabilizer_chain.hpp"

namespace nslen {

/// A permutation group given by generators. Immutable; the stabilizer chain,
/// element list and conjugacy classes are computed on first use and shared
/// by all copies. Concurrent first use is serialized internally.
class PermGroup {
public:
  /// Trivial group on one point.
  PermGroup();

  /// Group generated by `generators`, all of degree `degree`. Identity
  /// generators are dropped.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  /// Group with a prebuilt chain (the chain must describe <generators>).
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            StabilizerChain chain);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept;
  const std::vector<Permutation> &generators() const noexcept;
  Permutation identity() const { return Permutation(degree()); }

  const StabilizerChain &chain() const;
  BigInt order() const;
  bool is_trivial() const { return generators().empty(); }

  /// Membership by sifting. Throws DegreeMismatch.
  bool contains(const Permutation &p) const;

  /// Every generator of `other` lies in this group.
  bool contains(const PermGroup &other) const;

  /// Tier check helpers: throw TierExceeded naming `operation`.
  void require_enumerable(const Limits &limits, const char *operation) const;
  void require_small(const Limits &limits, const char *operation) const;
  bool is_enumerable(const Limits &limits) const;
  bool is_small(const Limits &limits) const;

  /// Visits every element once in transversal-product order, without
  /// materializing the list. Requires tier E.
  void for_each_element(const std::function<void(const Permutation &)> &visit,
                        const Limits &limits = default_limits()) const;

  /// All elements in transversal-product order (cached). Requires tier E.
  const std::vector<Permutation> &elements(const Limits &limits = default_limits()) const;

  /// Position of p in elements(); throws NotInGroup.
  std::size_t element_index(const Permutation &p,
                            const Limits &limits = default_limits()) const;

  /// One representative per conjugacy class, the least element of the class
  /// in enumeration order; the identity comes first. Requires tier E.
  const std::vector<Permutation> &
  class_representatives(const Limits &limits = default_limits()) const;

  /// Class sizes, parallel to class_representatives().
  const std::vector<std::size_t> &class_sizes(const Limits &limits = default_limits()) const;

  /// Class index of each element, parallel to elements().
  const std::vector<std::uint32_t> &class_of(const Limits &limits = default_limits()) const;

  /// Uniform element, determined by the seed.
  Permutation random_element(std::uint64_t seed) const;

  /// Sum of element hashes: equal subgroups have equal fingerprints.
  /// Requires tier E.
  std::uint64_t fingerprint(const Limits &limits = default_limits()) const;

  /// Memo slot for derived data computed by other modules. Racing first
  /// calls may both compute; the first stored value is the one returned.
  template <typename T, typename F>
  T cached(const std::string &key, F &&compute) const
  {
    {
      std::lock_guard lock(state_->mutex);
      auto it = state_->memo.find(key);
      if (it != state_->memo.end())
        return std::any_cast<T>(it->second);
    }
    T value = compute();
    std::lock_guard lock(state_->mutex);
    auto [it, inserted] = state_->memo.emplace(key, std::move(value));
    return std::any_cast<T>(it->second);
  }

  /// Same object (shared state), not merely equal.
  bool same_object(const PermGroup &other) const noexcept { return state_ == other.state_; }

private:
  struct Classes {
    std::vector<Permutation> reps;
    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> class_of;
  };

  struct State {
    std::size_t degree;
    std::vector<Permutation> generators;
    std::once_flag chain_once;
    std::unique_ptr<StabilizerChain> chain;
    std::once_flag elements_once;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    std::once_flag classes_once;
    Classes classes;
    std::once_flag fingerprint_once;
    std::uint64_t fingerprint = 0;
    std::recursive_mutex mutex;
    std::unordered_map<std::string, std::any> memo;
  };

  const Classes &classes(const Limits &limits) const;

  std::shared_ptr<State> state_;
};

/// Subgroup equality: mutual generator membership plus equal orders.
bool same_subgroup(const PermGroup &a, const PermGroup &b);

/// <S> for a list of elements; builds the chain incrementally so that only
/// elements not already generated become generators.
PermGroup generate(std::size_t degree, std::span<const Permutation> elements);

// Free-function forms of the core operations.
const StabilizerChain &stabilizer_chain(const PermGroup &g);
BigInt group_order(const PermGroup &g);
bool membership_test(const PermGroup &g, const Permutation &p);
std::vector<Permutation> enumerate_elements(const PermGroup &g,
                                            const Limits &limits = default_limits());
std::vector<Permutation> conjugacy_class_reps(const PermGroup &g,
                                              const Limits &limits = default_limits());
Permutation random_element(const PermGroup &g, std::uint64_t seed);

std::string to_string(const BigInt &n);

} // namespace nslen

#endif // NSLEN_PERM_GROUP_HPP
