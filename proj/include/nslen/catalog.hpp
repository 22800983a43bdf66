#ifndef NSLEN_CATALOG_HPP
#define NSLEN_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nslen/perm_group.hpp"

namespace nslen {

// Standard constructions. Point sets are 0-based internally; the text forms
// used in comments are 1-based.

/// Sym(n) = <(1 2), (1 2 ... n)>.
PermGroup symmetric_group(std::size_t n);

/// Alt(n) = <(1 2 3), (1 2 ... n)> for odd n, <(1 2 3), (2 3 ... n)> for even n.
PermGroup alternating_group(std::size_t n);

/// Cyclic(n) = <(1 2 ... n)>.
PermGroup cyclic_group(std::size_t n);

/// Dihedral group of the given order 2m, acting on m points (m >= 3).
/// Order 4 gives <(1 2), (3 4)> and order 2 gives Cyclic(2).
PermGroup dihedral_group(std::size_t order);

/// A x B on the disjoint union of the point sets (A's points first).
PermGroup direct_product(const PermGroup &a, const PermGroup &b);

/// A wr B acting imprimitively on deg(A) * deg(B) points: copy j of A's
/// point set occupies points j*deg(A) .. j*deg(A)+deg(A)-1, and B permutes
/// the copies.
PermGroup wreath_product(const PermGroup &a, const PermGroup &b);

/// SL(2,5) acting on the 24 nonzero row vectors of F_5^2.
PermGroup sl_2_5();
/// GL(2,3) acting on the 8 nonzero row vectors of F_3^2.
PermGroup gl_2_3();
/// PSL(2,7) acting by fractional linear maps on the projective line over F_7.
PermGroup psl_2_7();

/// "SL(2,5)", "GL(2,3)" or "PSL(2,7)"; throws ParseError(UnknownName).
PermGroup named_builder(std::string_view name);

/// Names and one-line descriptions of every builder, for `catalog`.
struct CatalogEntry {
  std::string syntax;
  std::string description;
};
std::vector<CatalogEntry> catalog_entries();

/// A parsed group description: the group plus a canonical text form.
struct GroupSpec {
  std::string name;
  std::string text;
  PermGroup group;
};

/// Parses either a builder expression such as "Wreath(Alt(5), Sym(2))" or
/// the line-oriented raw format:
///
///     # comment
///     degree 5
///     gen (1 2 3 4 5)
///     gen (1 2 3)
///
/// Throws ParseError carrying the line and column of the problem.
PermGroup parse_group_spec(std::string_view text);

/// Raw format of a group: "degree N" followed by one canonical "gen" line per
/// generator.
std::string print_raw_spec(const PermGroup &group);

} // namespace nslen

#endif // NSLEN_CATALOG_HPP
