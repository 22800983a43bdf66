#include "nslen/invariants.hpp"

#include <stdexcept>

#include "nslen/error.hpp"
#include "nslen/homomorphism.hpp"

namespace nslen {

namespace {

struct Step {
  PermGroup subgroup; // of the current quotient
  LayerLabel label;
  bool counts;
};

/// Builds 1 = L_0 < L_1 < ... < L_k = G where L_{i+1} is the preimage of
/// next(G/L_i). `next` returns nothing to close the series with G.
template <typename Next>
SeriesReport ascending_series(const PermGroup &g, const Limits &limits, Next next)
{
  SeriesReport r;
  r.direction = SeriesReport::Direction::Ascending;
  r.terms.push_back(PermGroup::trivial(g.degree()));
  while (r.terms.back().order() != g.order()) {
    GroupHom hom = quotient_group(g, r.terms.back(), limits);
    std::optional<Step> step = next(hom.image());
    if (!step) {
      r.terms.push_back(g);
      r.labels.push_back(LayerLabel::Soluble);
      break;
    }
    if (step->subgroup.is_trivial())
      throw std::logic_error("ascending series stalled");
    r.terms.push_back(hom.preimage(step->subgroup));
    r.labels.push_back(step->label);
    if (step->counts)
      ++r.value;
  }
  return r;
}

template <typename Pred>
PermGroup lattice_intersection(const PermGroup &g, const Limits &limits, Pred qualifies)
{
  PermGroup result = g;
  for (const auto &n : normal_subgroups(g, limits)) {
    if (result.is_trivial())
      break;
    if (n.contains(result) || !qualifies(n))
      continue;
    result = intersection(result, n, limits);
  }
  return result;
}

template <typename Sub>
SeriesReport descending_series(const PermGroup &g, LayerLabel label, Sub sub)
{
  SeriesReport r;
  r.terms.push_back(g);
  while (!r.terms.back().is_trivial()) {
    PermGroup next = sub(r.terms.back());
    if (next.order() == r.terms.back().order())
      throw std::logic_error("descending series stalled");
    r.terms.push_back(std::move(next));
    r.labels.push_back(label);
  }
  r.value = r.length();
  return r;
}

} // namespace

SeriesReport fitting_series(const PermGroup &g, const Limits &limits)
{
  if (!is_soluble(g))
    throw Error(ErrorKind::NotSoluble, "Fitting series of a nonsoluble group");
  g.require_enumerable(limits, "Fitting series");
  return ascending_series(g, limits, [&](const PermGroup &q) {
    return std::optional<Step>(Step{fitting_subgroup(q, limits), LayerLabel::Nilpotent, true});
  });
}

std::size_t fitting_height(const PermGroup &g, const Limits &limits)
{
  if (!is_soluble(g))
    throw Error(ErrorKind::NotSoluble, "Fitting height of a nonsoluble group");
  return g.cached<std::size_t>("fitting_height", [&] { return fitting_series(g, limits).value; });
}

SeriesReport generalized_fitting_series(const PermGroup &g, const Limits &limits)
{
  g.require_enumerable(limits, "generalized Fitting series");
  return ascending_series(g, limits, [&](const PermGroup &q) {
    return std::optional<Step>(
      Step{generalized_fitting_subgroup(q, limits), LayerLabel::GeneralizedFitting, true});
  });
}

std::size_t h_star(const PermGroup &g, const Limits &limits)
{
  return g.cached<std::size_t>("h_star",
                               [&] { return generalized_fitting_series(g, limits).value; });
}

SeriesReport lambda_series(const PermGroup &g, const Limits &limits)
{
  g.require_enumerable(limits, "nonsoluble length");
  return ascending_series(g, limits, [&](const PermGroup &q) -> std::optional<Step> {
    if (is_soluble(q))
      return std::nullopt;
    PermGroup r = soluble_radical(q, limits);
    if (!r.is_trivial())
      return Step{r, LayerLabel::Soluble, false};
    return Step{socle(q, limits), LayerLabel::Semisimple, true};
  });
}

std::size_t nonsoluble_length(const PermGroup &g, const Limits &limits)
{
  if (is_soluble(g))
    return 0;
  return g.cached<std::size_t>("lambda", [&] { return lambda_series(g, limits).value; });
}

PermGroup t_subgroup(const PermGroup &g, const Limits &limits)
{
  // N = 1 qualifies when G itself does
  if (g.is_trivial() || nonsoluble_length(g, limits) <= 1)
    return PermGroup::trivial(g.degree());
  g.require_small(limits, "T subgroup");
  return g.cached<PermGroup>("t_subgroup", [&] {
    return lattice_intersection(g, limits, [&](const PermGroup &n) {
      return nonsoluble_length(quotient_group(g, n, limits).image(), limits) <= 1;
    });
  });
}

SeriesReport t_series(const PermGroup &g, const Limits &limits)
{
  return descending_series(g, LayerLabel::TStep,
                           [&](const PermGroup &t) { return t_subgroup(t, limits); });
}

PermGroup k_subgroup(const PermGroup &g, const Limits &limits)
{
  if (g.is_trivial() || generalized_fitting_subgroup(g, limits).order() == g.order())
    return PermGroup::trivial(g.degree());
  g.require_small(limits, "K subgroup");
  return g.cached<PermGroup>("k_subgroup", [&] {
    return lattice_intersection(g, limits, [&](const PermGroup &n) {
      PermGroup q = quotient_group(g, n, limits).image();
      return generalized_fitting_subgroup(q, limits).order() == q.order();
    });
  });
}

SeriesReport k_series(const PermGroup &g, const Limits &limits)
{
  return descending_series(g, LayerLabel::KStep,
                           [&](const PermGroup &k) { return k_subgroup(k, limits); });
}

bool is_semisimple(const PermGroup &n, const Limits &limits)
{
  if (n.is_trivial())
    return false;
  return soluble_radical(n, limits).is_trivial() && socle(n, limits).order() == n.order();
}

SemisimpleDecomposition semisimple_factors(const PermGroup &n, const Limits &limits)
{
  n.require_enumerable(limits, "semisimple factors");
  if (!is_semisimple(n, limits))
    throw Error(ErrorKind::NotSemisimple, "not a direct product of nonabelian simple groups");
  SemisimpleDecomposition d;
  d.factors = components(n, limits).components;
  d.t = d.factors.size();
  return d;
}

} // namespace nslen
