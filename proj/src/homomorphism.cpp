#include "nslen/homomorphism.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "nslen/error.hpp"

namespace nslen {

struct GroupHom::Impl {
  PermGroup source;
  PermGroup image;
  Map project;
  Map lift; // empty: lift through the graph chain

  std::once_flag kernel_once;
  std::optional<PermGroup> kernel;

  // Chain of the graph {(project(x), x)} on image_degree + source_degree
  // points, image points first, with the image base as base prefix.
  std::once_flag graph_once;
  std::unique_ptr<StabilizerChain> graph;
  std::size_t prefix = 0;

  const StabilizerChain &graph_chain()
  {
    std::call_once(graph_once, [this] {
      const std::size_t m = image.degree();
      const std::size_t n = source.degree();
      auto base = image.chain().base();
      auto chain = std::make_unique<StabilizerChain>(m + n, base);
      for (const auto &g : source.generators()) {
        Permutation y = project(g);
        std::vector<Point> images(m + n);
        for (Point i = 0; i < m; ++i)
          images[i] = y[i];
        for (Point i = 0; i < n; ++i)
          images[m + i] = static_cast<Point>(m + g[i]);
        chain->extend(Permutation(std::move(images)));
      }
      prefix = base.size();
      graph = std::move(chain);
    });
    return *graph;
  }

  Permutation source_part(const Permutation &combined) const
  {
    const std::size_t m = image.degree();
    const std::size_t n = source.degree();
    std::vector<Point> images(n);
    for (Point i = 0; i < n; ++i)
      images[i] = static_cast<Point>(combined[static_cast<Point>(m + i)] - m);
    return Permutation(std::move(images));
  }

  Permutation image_part(const Permutation &combined) const
  {
    const std::size_t m = image.degree();
    std::vector<Point> images(m);
    for (Point i = 0; i < m; ++i)
      images[i] = combined[i];
    return Permutation(std::move(images));
  }
};

GroupHom GroupHom::from_action(PermGroup source, std::size_t image_degree, Map project)
{
  std::vector<Permutation> gens;
  for (const auto &g : source.generators())
    gens.push_back(project(g));
  auto impl = std::make_shared<Impl>();
  impl->source = std::move(source);
  impl->image = PermGroup(image_degree, std::move(gens));
  impl->project = std::move(project);
  return GroupHom(std::move(impl));
}

GroupHom GroupHom::with_kernel(PermGroup source, PermGroup image, PermGroup kernel,
                               Map project, Map lift)
{
  auto impl = std::make_shared<Impl>();
  impl->source = std::move(source);
  impl->image = std::move(image);
  impl->project = std::move(project);
  impl->lift = std::move(lift);
  std::call_once(impl->kernel_once, [&] { impl->kernel = std::move(kernel); });
  return GroupHom(std::move(impl));
}

GroupHom GroupHom::identity(const PermGroup &group)
{
  auto same = [](const Permutation &x) { return x; };
  return with_kernel(group, group, PermGroup::trivial(group.degree()), same, same);
}

const PermGroup &GroupHom::source() const noexcept { return impl_->source; }

const PermGroup &GroupHom::image() const noexcept { return impl_->image; }

const PermGroup &GroupHom::kernel() const
{
  std::call_once(impl_->kernel_once, [this] {
    const auto &chain = impl_->graph_chain();
    std::vector<Permutation> gens;
    if (chain.length() > impl_->prefix) {
      for (const auto &s : chain.generators(impl_->prefix))
        gens.push_back(impl_->source_part(s));
    }
    impl_->kernel = generate(impl_->source.degree(), gens);
  });
  return *impl_->kernel;
}

Permutation GroupHom::project(const Permutation &x) const
{
  if (x.degree() != impl_->source.degree())
    throw Error(ErrorKind::DegreeMismatch, "element degree does not match the source group");
  return impl_->project(x);
}

Permutation GroupHom::lift(const Permutation &y) const
{
  if (y.degree() != impl_->image.degree())
    throw Error(ErrorKind::DegreeMismatch, "element degree does not match the image group");
  if (impl_->lift)
    return impl_->lift(y);

  const auto &chain = impl_->graph_chain();
  Permutation rest = y;
  Permutation acc(chain.degree());
  for (std::size_t i = 0; i < impl_->prefix; ++i) {
    Point b = chain.base_point(i);
    Point beta = rest[b];
    if (beta == b)
      continue;
    if (!chain.in_orbit(i, beta))
      throw Error(ErrorKind::NotInGroup, "element is not in the image");
    Permutation u = chain.transversal(i, beta);
    rest = rest * impl_->image_part(u).inverse();
    acc = u * acc;
  }
  if (!rest.is_identity())
    throw Error(ErrorKind::NotInGroup, "element is not in the image");
  return impl_->source_part(acc);
}

PermGroup GroupHom::image_of(const PermGroup &subgroup) const
{
  std::vector<Permutation> gens;
  for (const auto &g : subgroup.generators())
    gens.push_back(project(g));
  return PermGroup(impl_->image.degree(), std::move(gens));
}

PermGroup GroupHom::preimage(const PermGroup &subgroup) const
{
  std::vector<Permutation> elems = kernel().generators();
  for (const auto &y : subgroup.generators())
    elems.push_back(lift(y));
  return generate(impl_->source.degree(), elems);
}

bool is_normal_subgroup(const PermGroup &g, const PermGroup &n)
{
  for (const auto &x : n.generators()) {
    for (const auto &s : g.generators()) {
      if (!n.contains(x.conjugate_by(s)))
        return false;
    }
  }
  return true;
}

namespace {

/// Least element of the right coset Hx, comparing base images level by level
/// along H's chain. Two elements give the same result iff they lie in the
/// same right coset.
Permutation canonical_coset_rep(const StabilizerChain &hc, Permutation x)
{
  for (std::size_t i = 0; i < hc.length(); ++i) {
    Point best = hc.base_point(i);
    for (Point o : hc.orbit(i)) {
      if (x[o] < x[best])
        best = o;
    }
    if (best != hc.base_point(i))
      x = hc.transversal(i, best) * x;
  }
  return x;
}

struct CosetTable {
  std::vector<Permutation> reps;
  std::unordered_map<Permutation, Point, PermutationHash> index;
  std::vector<Permutation> generator_images;
};

CosetTable enumerate_cosets(const PermGroup &g, const PermGroup &h)
{
  const auto &hc = h.chain();
  CosetTable t;
  t.reps.push_back(canonical_coset_rep(hc, g.identity()));
  t.index.emplace(t.reps[0], 0);
  std::vector<std::vector<Point>> images(g.generators().size());
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Permutation c = canonical_coset_rep(hc, t.reps[i] * g.generators()[s]);
      auto [it, inserted] = t.index.emplace(c, static_cast<Point>(t.reps.size()));
      if (inserted)
        t.reps.push_back(std::move(c));
      images[s].push_back(it->second);
    }
  }
  for (auto &img : images)
    t.generator_images.emplace_back(std::move(img));
  return t;
}

void check_index(const PermGroup &g, const PermGroup &h, const Limits &limits)
{
  BigInt index = g.order() / h.order();
  if (index > limits.quotient_cap)
    throw TierExceeded("coset action: index " + to_string(index) + " exceeds the quotient cap " +
                       std::to_string(limits.quotient_cap));
}

/// Action of G on the orbits of a normal subgroup (a block system). Returns
/// nothing unless its kernel is exactly N.
std::optional<GroupHom> block_action(const PermGroup &g, const PermGroup &n)
{
  const std::size_t degree = g.degree();
  constexpr Point kNone = static_cast<Point>(-1);
  std::vector<Point> block(degree, kNone);
  Point blocks = 0;
  for (Point p = 0; p < degree; ++p) {
    if (block[p] != kNone)
      continue;
    std::vector<Point> queue{p};
    block[p] = blocks;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const auto &s : n.generators()) {
        Point q = s[queue[k]];
        if (block[q] == kNone) {
          block[q] = blocks;
          queue.push_back(q);
        }
      }
    }
    ++blocks;
  }
  std::vector<Point> representative(blocks);
  for (Point p = degree; p-- > 0;)
    representative[block[p]] = p;

  auto act = [block, representative, blocks](const Permutation &x) {
    std::vector<Point> images(blocks);
    for (Point b = 0; b < blocks; ++b)
      images[b] = block[x[representative[b]]];
    return Permutation(std::move(images));
  };
  GroupHom hom = GroupHom::from_action(g, blocks, act);
  if (hom.image().order() * n.order() != g.order())
    return std::nullopt;
  return GroupHom::with_kernel(g, hom.image(), n, act,
                               [hom](const Permutation &y) { return hom.lift(y); });
}

} // namespace

GroupHom coset_action(const PermGroup &g, const PermGroup &h, const Limits &limits)
{
  if (g.degree() != h.degree() || !g.contains(h))
    throw Error(ErrorKind::NotSubgroup, "coset action: H is not a subgroup of G");
  check_index(g, h, limits);
  auto table = std::make_shared<CosetTable>(enumerate_cosets(g, h));
  const std::size_t m = table->reps.size();
  auto act = [table, h, m](const Permutation &x) {
    const auto &hc = h.chain();
    std::vector<Point> images(m);
    for (std::size_t i = 0; i < m; ++i)
      images[i] = table->index.at(canonical_coset_rep(hc, table->reps[i] * x));
    return Permutation(std::move(images));
  };
  PermGroup image(m, table->generator_images);
  if (is_normal_subgroup(g, h)) {
    // point y(0) is the coset H*r, and r maps H to it
    auto lift = [table](const Permutation &y) { return table->reps[y[0]]; };
    return GroupHom::with_kernel(g, image, h, act, lift);
  }
  return GroupHom::from_action(g, m, act);
}

GroupHom quotient_group(const PermGroup &g, const PermGroup &n, const Limits &limits)
{
  if (g.degree() != n.degree() || !g.contains(n))
    throw Error(ErrorKind::NotSubgroup, "quotient: N is not a subgroup of G");
  if (!is_normal_subgroup(g, n))
    throw Error(ErrorKind::NotNormal, "quotient: N is not normal in G");
  if (n.is_trivial())
    return GroupHom::identity(g);
  if (n.order() == g.order()) {
    auto to_one = [](const Permutation &) { return Permutation(1); };
    auto from_one = [d = g.degree()](const Permutation &) { return Permutation(d); };
    return GroupHom::with_kernel(g, PermGroup::trivial(1), n, to_one, from_one);
  }
  if (auto blocks = block_action(g, n))
    return *blocks;
  return coset_action(g, n, limits);
}

GroupHom kernel_of_action_on_factors(const PermGroup &g, const std::vector<PermGroup> &factors,
                                     const Limits &)
{
  const std::size_t t = factors.size();
  if (t == 0)
    throw Error(ErrorKind::InvalidArgument, "action on factors: empty factor list");
  for (const auto &f : factors) {
    if (f.degree() != g.degree())
      throw Error(ErrorKind::DegreeMismatch, "action on factors: degree mismatch");
  }
  auto act = [factors, t](const Permutation &x) {
    std::vector<Point> images(t);
    for (std::size_t i = 0; i < t; ++i) {
      std::vector<Permutation> conj;
      for (const auto &s : factors[i].generators())
        conj.push_back(s.conjugate_by(x));
      PermGroup c(factors[i].degree(), std::move(conj));
      std::size_t j = 0;
      while (j < t && !same_subgroup(c, factors[j]))
        ++j;
      if (j == t)
        throw Error(ErrorKind::NotPermuted,
                    "action on factors: a conjugate of factor " + std::to_string(i + 1) +
                      " is not in the list");
      images[i] = static_cast<Point>(j);
    }
    return Permutation(std::move(images));
  };
  return GroupHom::from_action(g, t, act);
}

} // namespace nslen
