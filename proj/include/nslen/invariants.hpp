#ifndef NSLEN_INVARIANTS_HPP
#define NSLEN_INVARIANTS_HPP

#include <vector>

#include "nslen/limits.hpp"
#include "nslen/perm_group.hpp"
#include "nslen/structure.hpp"

namespace nslen {

/// Simple direct factors S_1..S_t of a semisimple group N.
struct SemisimpleDecomposition {
  std::vector<PermGroup> factors;
  std::size_t t = 0;
};

/// 1 = F_0 < F_1 < ... < F_h = G with F_{i+1}/F_i = F(G/F_i). Throws
/// NotSoluble.
SeriesReport fitting_series(const PermGroup &g, const Limits &limits = default_limits());
std::size_t fitting_height(const PermGroup &g, const Limits &limits = default_limits());

/// 1 = F*_0 < F*_1 < ... < F*_h = G with F*_{i+1}/F*_i = F*(G/F*_i).
SeriesReport generalized_fitting_series(const PermGroup &g,
                                        const Limits &limits = default_limits());
std::size_t h_star(const PermGroup &g, const Limits &limits = default_limits());

/// Ascending normal series alternating soluble and semisimple factors, built
/// by taking R(Q) of the current quotient Q while it is nontrivial and Soc(Q)
/// otherwise. Its number of semisimple layers is the nonsoluble length.
SeriesReport lambda_series(const PermGroup &g, const Limits &limits = default_limits());
std::size_t nonsoluble_length(const PermGroup &g, const Limits &limits = default_limits());

/// Intersection of the normal subgroups N with nonsoluble_length(G/N) <= 1.
/// Requires tier S.
PermGroup t_subgroup(const PermGroup &g, const Limits &limits = default_limits());

/// T_1 = G, T_{i+1} = T(T_i), down to the trivial group.
SeriesReport t_series(const PermGroup &g, const Limits &limits = default_limits());

/// Intersection of the normal subgroups N with F*(G/N) = G/N. Requires
/// tier S.
PermGroup k_subgroup(const PermGroup &g, const Limits &limits = default_limits());

/// K_1 = G, K_{i+1} = K(K_i), down to the trivial group.
SeriesReport k_series(const PermGroup &g, const Limits &limits = default_limits());

/// Throws NotSemisimple unless N is a nontrivial direct product of
/// nonabelian simple groups.
SemisimpleDecomposition semisimple_factors(const PermGroup &n,
                                           const Limits &limits = default_limits());

bool is_semisimple(const PermGroup &n, const Limits &limits = default_limits());

} // namespace nslen

#endif // NSLEN_INVARIANTS_HPP
