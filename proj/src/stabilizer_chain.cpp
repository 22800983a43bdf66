#include "nslen/stabilizer_chain.hpp"

#include <algorithm>
#include <deque>

#include "nslen/error.hpp"

namespace nslen {

StabilizerChain::StabilizerChain(std::size_t degree, std::vector<Point> base_prefix)
  : degree_(degree)
{
  for (Point b : base_prefix) {
    if (b >= degree)
      throw Error(ErrorKind::InvalidArgument, "base point outside the point set");
    add_level(b);
  }
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> result;
  result.reserve(levels_.size());
  for (const auto &level : levels_)
    result.push_back(level.base);
  return result;
}

void StabilizerChain::add_level(Point base)
{
  Level level;
  level.base = base;
  rebuild_orbit(level);
  levels_.push_back(std::move(level));
}

void StabilizerChain::add_generator(std::size_t level, const Permutation &g)
{
  auto &l = levels_[level];
  l.gens.push_back(g);
  l.gens_inv.push_back(g.inverse());
  rebuild_orbit(l);
}

void StabilizerChain::rebuild_orbit(Level &level)
{
  level.tree.assign(degree_, kAbsent);
  level.orbit.clear();
  level.tree[level.base] = kRoot;
  level.orbit.push_back(level.base);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point beta = level.orbit[k];
    for (std::size_t s = 0; s < level.gens.size(); ++s) {
      Point gamma = level.gens[s][beta];
      if (level.tree[gamma] == kAbsent) {
        level.tree[gamma] = static_cast<std::int32_t>(s);
        level.orbit.push_back(gamma);
      }
    }
  }
}

Permutation StabilizerChain::transversal(std::size_t level, Point beta) const
{
  const auto &l = levels_[level];
  if (l.tree[beta] == kAbsent)
    throw Error(ErrorKind::InvalidArgument, "point is not in the basic orbit");
  std::vector<std::int32_t> path;
  while (l.tree[beta] != kRoot) {
    auto s = l.tree[beta];
    path.push_back(s);
    beta = l.gens_inv[static_cast<std::size_t>(s)][beta];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u *= l.gens[static_cast<std::size_t>(*it)];
  return u;
}

void StabilizerChain::strip_level(const Level &level, Permutation &g) const
{
  for (Point beta = g[level.base]; beta != level.base; beta = g[level.base])
    g *= level.gens_inv[static_cast<std::size_t>(level.tree[beta])];
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g, std::size_t from_level) const
{
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const auto &level = levels_[i];
    Point beta = g[level.base];
    if (beta == level.base)
      continue;
    if (level.tree[beta] == kAbsent)
      return {std::move(g), i};
    strip_level(level, g);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation &g) const
{
  if (g.degree() != degree_)
    return false;
  return sift(g).residue.is_identity();
}

bool StabilizerChain::extend(const Permutation &g)
{
  if (g.degree() != degree_)
    throw Error(ErrorKind::DegreeMismatch, "generator degree does not match the chain");
  auto [h, j] = sift(g);
  if (h.is_identity())
    return false;
  if (j == levels_.size())
    add_level(h.first_moved_point());
  for (std::size_t l = 0; l <= j; ++l)
    add_generator(l, h);
  complete(j);
  return true;
}

void StabilizerChain::complete(std::size_t start_level)
{
  // Levels above i are complete; check the Schreier generators of level i.
  // Any non-sifting generator becomes a new strong generator and the scan
  // restarts from the deepest level it touched.
  auto i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    auto li = static_cast<std::size_t>(i);
    bool restart = false;
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restart; ++k) {
      Permutation u = transversal(li, levels_[li].orbit[k]);
      for (std::size_t s = 0; s < levels_[li].gens.size(); ++s) {
        Permutation g = u * levels_[li].gens[s];
        strip_level(levels_[li], g);
        if (g.is_identity())
          continue;
        auto [h, j] = sift(std::move(g), li + 1);
        if (h.is_identity())
          continue;
        if (j == levels_.size())
          add_level(h.first_moved_point());
        for (std::size_t l = li + 1; l <= j; ++l)
          add_generator(l, h);
        i = static_cast<std::ptrdiff_t>(j);
        restart = true;
        break;
      }
    }
    if (!restart)
      --i;
  }
}

BigInt StabilizerChain::order() const
{
  BigInt result = 1;
  for (const auto &level : levels_)
    result *= level.orbit.size();
  return result;
}

bool StabilizerChain::verify() const
{
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto &level = levels_[i];
    for (const auto &s : level.gens) {
      for (std::size_t prev = 0; prev < i; ++prev) {
        if (s[levels_[prev].base] != levels_[prev].base)
          return false;
      }
    }
    for (Point beta : level.orbit) {
      Permutation u = transversal(i, beta);
      for (const auto &s : level.gens) {
        Permutation g = u * s;
        strip_level(level, g);
        if (!sift(std::move(g), i + 1).residue.is_identity())
          return false;
      }
    }
  }
  return true;
}

} // namespace nslen
