#ifndef NSLEN_STABILIZER_CHAIN_HPP
#define NSLEN_STABILIZER_CHAIN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nslen/permutation.hpp"

namespace nslen {

using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set built by deterministic incremental
/// Schreier-Sims.
///
/// Level i holds the base point b_i, the strong generators fixing
/// b_0..b_{i-1}, and the orbit of b_i under them encoded as a Schreier vector
/// (for each orbit point, the generator that reached it in the BFS tree).
/// New base points are always the least point moved by the element that
/// forces them. A base prefix may be supplied; it is kept in front even if
/// some of its levels turn out redundant.
class StabilizerChain {
public:
  struct SiftResult {
    Permutation residue;
    // index of the level where sifting stopped; length() if every level passed
    std::size_t level;
  };

  explicit StabilizerChain(std::size_t degree, std::vector<Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }

  std::vector<Point> base() const;
  Point base_point(std::size_t level) const { return levels_[level].base; }

  /// Strong generators of the level-th basic stabilizer.
  const std::vector<Permutation> &generators(std::size_t level) const
  {
    return levels_[level].gens;
  }

  /// Orbit of the level-th base point, in BFS discovery order.
  const std::vector<Point> &orbit(std::size_t level) const { return levels_[level].orbit; }

  bool in_orbit(std::size_t level, Point beta) const
  {
    return levels_[level].tree[beta] != kAbsent;
  }

  /// Coset representative mapping the level's base point to beta.
  Permutation transversal(std::size_t level, Point beta) const;

  SiftResult sift(Permutation g, std::size_t from_level = 0) const;

  bool contains(const Permutation &g) const;

  /// Adds g to the group; returns false (and changes nothing) if g was
  /// already a member.
  bool extend(const Permutation &g);

  BigInt order() const;

  /// Independent check: every Schreier generator of every level sifts to the
  /// identity through the levels below it.
  bool verify() const;

private:
  static constexpr std::int32_t kAbsent = -1;
  static constexpr std::int32_t kRoot = -2;

  struct Level {
    Point base;
    std::vector<Permutation> gens;
    std::vector<Permutation> gens_inv;
    std::vector<std::int32_t> tree;
    std::vector<Point> orbit;
  };

  void add_level(Point base);
  void add_generator(std::size_t level, const Permutation &g);
  void rebuild_orbit(Level &level);
  void strip_level(const Level &level, Permutation &g) const;
  void complete(std::size_t start_level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

} // namespace nslen

#endif // NSLEN_STABILIZER_CHAIN_HPP
