#ifndef NSLEN_STRUCTURE_HPP
#define NSLEN_STRUCTURE_HPP

#include <vector>

#include "nslen/limits.hpp"
#include "nslen/perm_group.hpp"

namespace nslen {

enum class LayerLabel {
  Soluble,
  Semisimple,
  Nilpotent,
  GeneralizedFitting,
  TStep,
  KStep,
};

const char *to_string(LayerLabel label);

/// A chain of subgroups of one ambient group, with a label per consecutive
/// pair and the invariant the chain witnesses. Descending series start at
/// the group itself; ascending ones start at the trivial group.
struct SeriesReport {
  enum class Direction { Ascending, Descending };

  Direction direction = Direction::Descending;
  std::vector<PermGroup> terms;
  std::vector<LayerLabel> labels;
  std::size_t value = 0;

  /// Whether the trivial end of the chain is the trivial group.
  bool reaches_trivial() const;
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  std::vector<BigInt> orders() const;
};

/// Quasisimple subnormal subgroups and their product E(G).
struct ComponentSet {
  std::vector<PermGroup> components;
  PermGroup layer;
};

/// Smallest normal subgroup of G containing S. Throws NotInGroup.
PermGroup normal_closure(const PermGroup &g, const std::vector<Permutation> &s);
PermGroup normal_closure(const PermGroup &g, const PermGroup &h);

/// Normal closure in <A, B> of the commutators of their generators; equals
/// [A, B] when A and B normalize each other.
PermGroup commutator_subgroup(const PermGroup &a, const PermGroup &b);

SeriesReport derived_series(const PermGroup &g);
bool is_soluble(const PermGroup &g);

SeriesReport lower_central_series(const PermGroup &g);
bool is_nilpotent(const PermGroup &g);

bool is_perfect(const PermGroup &g);

/// Last term of the derived series.
PermGroup perfect_core(const PermGroup &g);

PermGroup centralizer(const PermGroup &g, const PermGroup &h,
                      const Limits &limits = default_limits());
PermGroup centre(const PermGroup &g, const Limits &limits = default_limits());

PermGroup intersection(const PermGroup &a, const PermGroup &b,
                       const Limits &limits = default_limits());
PermGroup join(const PermGroup &a, const PermGroup &b);

/// |G| > 1 and every nontrivial class has normal closure G. Abelian groups
/// of prime order count as simple.
bool is_simple(const PermGroup &g, const Limits &limits = default_limits());
bool is_nonabelian_simple(const PermGroup &g, const Limits &limits = default_limits());
bool is_quasisimple(const PermGroup &g, const Limits &limits = default_limits());

/// Normal closures of the class representatives, parallel to
/// g.class_representatives(). Cached per group.
std::vector<PermGroup> class_closures(const PermGroup &g,
                                      const Limits &limits = default_limits());

PermGroup soluble_radical(const PermGroup &g, const Limits &limits = default_limits());
PermGroup fitting_subgroup(const PermGroup &g, const Limits &limits = default_limits());

/// Throws TrivialGroup for the trivial group.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g,
                                                const Limits &limits = default_limits());
PermGroup socle(const PermGroup &g, const Limits &limits = default_limits());

/// Fixpoint of H -> <x^H> starting from G: the smallest subnormal subgroup
/// containing x. Throws NotInGroup.
PermGroup subnormal_closure(const PermGroup &g, const Permutation &x);

ComponentSet components(const PermGroup &g, const Limits &limits = default_limits());

/// F*(G) = F(G)E(G).
PermGroup generalized_fitting_subgroup(const PermGroup &g,
                                       const Limits &limits = default_limits());

/// Every normal subgroup of G, sorted by order (ties in discovery order).
/// Requires tier S; throws LatticeCapExceeded past the lattice cap.
std::vector<PermGroup> normal_subgroups(const PermGroup &g,
                                        const Limits &limits = default_limits());

/// d(G), by exhaustive search over tuples whose first entry is a class
/// representative. Requires tier S.
std::size_t minimal_generator_count(const PermGroup &g, const Limits &limits = default_limits());

} // namespace nslen

#endif // NSLEN_STRUCTURE_HPP
