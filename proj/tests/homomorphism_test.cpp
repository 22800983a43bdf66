#include <gtest/gtest.h>

#include "nslen/catalog.hpp"
#include "nslen/error.hpp"
#include "nslen/homomorphism.hpp"
#include "support/cayley_oracle.hpp"

using namespace nslen;

namespace {

Permutation P(const char *text, std::size_t degree) { return parse_permutation(text, degree); }

PermGroup v4_in_s4() { return PermGroup(4, {P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)}); }

PermGroup centre_of_sl25()
{
  auto g = sl_2_5();
  for (const auto &x : g.elements()) {
    if (!x.is_identity() && x.order() == 2)
      return PermGroup(g.degree(), {x});
  }
  throw std::logic_error("no involution");
}

// checks every GroupHom invariant on a sample of elements
void check_hom(const GroupHom &hom, int samples = 30)
{
  const auto &g = hom.source();
  EXPECT_EQ(g.order(), hom.kernel().order() * hom.image().order());
  for (int s = 0; s < samples; ++s) {
    auto p = g.random_element(static_cast<std::uint64_t>(s));
    auto q = g.random_element(static_cast<std::uint64_t>(s + 500));
    EXPECT_EQ(hom.project(p * q), hom.project(p) * hom.project(q));
    EXPECT_TRUE(hom.image().contains(hom.project(p)));
    auto back = hom.lift(hom.project(p));
    EXPECT_TRUE(g.contains(back));
    EXPECT_TRUE(hom.kernel().contains(back * p.inverse()));
    auto y = hom.image().random_element(static_cast<std::uint64_t>(s + 900));
    EXPECT_EQ(hom.project(hom.lift(y)), y);
  }
  for (const auto &k : hom.kernel().generators())
    EXPECT_TRUE(hom.project(k).is_identity());
}

} // namespace

TEST(CosetAction, Sym3OnCosetsOfTransposition)
{
  auto g = symmetric_group(3);
  PermGroup h(3, {P("(1 2)", 3)});
  auto hom = coset_action(g, h);
  EXPECT_EQ(hom.image().degree(), 3u);
  EXPECT_EQ(hom.image().order(), 6);
  EXPECT_TRUE(hom.kernel().is_trivial());
  check_hom(hom);
}

TEST(CosetAction, Sym4OnAlt4)
{
  auto hom = coset_action(symmetric_group(4), alternating_group(4));
  EXPECT_EQ(hom.image().degree(), 2u);
  EXPECT_EQ(hom.image().order(), 2);
  EXPECT_TRUE(same_subgroup(hom.kernel(), alternating_group(4)));
  check_hom(hom);
}

TEST(CosetAction, Sym4OnV4MatchesCosetTable)
{
  auto g = symmetric_group(4);
  auto hom = coset_action(g, v4_in_s4());
  EXPECT_EQ(hom.image().order(), 6);
  EXPECT_EQ(hom.image().degree(), 6u);

  auto table = oracle::Cayley::from_group(g);
  auto v4 = table.subset_of(v4_in_s4());
  auto q = table.quotient(v4);
  EXPECT_EQ(q.order(), 6u);
  EXPECT_EQ(q.class_count(), conjugacy_class_reps(hom.image()).size());
  EXPECT_FALSE(q.is_nilpotent(q.whole()));
  check_hom(hom);
}

TEST(CosetAction, PointZeroIsTheSubgroup)
{
  auto g = symmetric_group(5);
  PermGroup h(5, {P("(1 2 3 4)", 5), P("(1 2)", 5)});
  auto hom = coset_action(g, h);
  EXPECT_EQ(hom.image().degree(), 5u);
  for (const auto &x : h.generators())
    EXPECT_EQ(hom.project(x)[0], 0u);
  check_hom(hom);
}

TEST(CosetAction, Errors)
{
  auto g = alternating_group(5);
  EXPECT_THROW(coset_action(g, PermGroup(5, {P("(1 2)", 5)})), Error);
  try {
    coset_action(g, PermGroup(5, {P("(1 2)", 5)}));
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSubgroup);
  }
  Limits limits;
  limits.quotient_cap = 10;
  EXPECT_THROW(coset_action(g, PermGroup::trivial(5), limits), TierExceeded);
}

TEST(CosetAction, NonNormalKernelIsCore)
{
  // S4 on cosets of a point stabilizer S3 is faithful
  auto g = symmetric_group(4);
  PermGroup h(4, {P("(1 2 3)", 4), P("(1 2)", 4)});
  auto hom = coset_action(g, h);
  EXPECT_TRUE(hom.kernel().is_trivial());
  // S4 on cosets of D8 has kernel V4
  PermGroup d8(4, {P("(1 2 3 4)", 4), P("(1 3)", 4)});
  auto hom2 = coset_action(g, d8);
  EXPECT_TRUE(same_subgroup(hom2.kernel(), v4_in_s4()));
  check_hom(hom2);
}

TEST(QuotientGroup, Sym4ByV4)
{
  auto hom = quotient_group(symmetric_group(4), v4_in_s4());
  EXPECT_EQ(hom.image().order(), 6);
  EXPECT_TRUE(same_subgroup(hom.kernel(), v4_in_s4()));
  check_hom(hom);
}

TEST(QuotientGroup, SL25ByCentreIsSimpleOfOrder60)
{
  auto g = sl_2_5();
  auto z = centre_of_sl25();
  auto hom = quotient_group(g, z);
  EXPECT_EQ(hom.image().order(), 60);
  auto table = oracle::Cayley::from_group(hom.image());
  EXPECT_TRUE(table.is_nonabelian_simple());
  check_hom(hom);
}

TEST(QuotientGroup, ByWholeGroupIsTrivial)
{
  auto g = symmetric_group(5);
  auto hom = quotient_group(g, g);
  EXPECT_TRUE(hom.image().is_trivial());
  EXPECT_EQ(hom.image().order(), 1);
  EXPECT_EQ(hom.kernel().order(), 120);
  check_hom(hom);
}

TEST(QuotientGroup, ByTrivialIsFaithful)
{
  auto g = gl_2_3();
  auto hom = quotient_group(g, PermGroup::trivial(g.degree()));
  EXPECT_EQ(hom.image().order(), 48);
  check_hom(hom);
}

TEST(QuotientGroup, NotNormal)
{
  try {
    quotient_group(symmetric_group(3), PermGroup(3, {P("(1 2)", 3)}));
    ADD_FAILURE() << "expected NotNormal";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormal);
  }
}

TEST(QuotientGroup, CosetFallbackWhenOrbitsAreTooCoarse)
{
  // V4 is transitive on 4 points, so Alt(4)/V4 needs the coset action
  auto a4 = alternating_group(4);
  auto hom = quotient_group(a4, v4_in_s4());
  EXPECT_EQ(hom.image().order(), 3);
  EXPECT_EQ(hom.image().degree(), 3u);
  check_hom(hom);
}

TEST(QuotientGroup, MatchesOracleOnEveryNormalSubgroup)
{
  for (const char *spec : {"Sym(4)", "GL(2,3)", "Dihedral(8)", "Alt(4) x Cyclic(3)"}) {
    auto g = parse_group_spec(spec);
    auto table = oracle::Cayley::from_group(g);
    for (const auto &n : table.normal_subgroups()) {
      auto ng = table.to_group(g.degree(), n);
      auto hom = quotient_group(g, ng);
      auto expected = table.quotient(n);
      EXPECT_EQ(hom.image().order(), expected.order()) << spec;
      EXPECT_TRUE(same_subgroup(hom.kernel(), ng)) << spec;
      auto img = oracle::Cayley::from_group(hom.image());
      EXPECT_EQ(img.class_count(), expected.class_count()) << spec;
      EXPECT_EQ(img.normal_subgroups().size(), expected.normal_subgroups().size()) << spec;
      check_hom(hom, 10);
    }
  }
}

TEST(QuotientGroup, IteratedQuotientAgreesInOrder)
{
  // G / M computed directly and as (G/N) / (M/N)
  auto g = symmetric_group(4);
  auto n = v4_in_s4();
  auto m = alternating_group(4);
  auto first = quotient_group(g, n);
  auto second = quotient_group(first.image(), first.image_of(m));
  auto direct = quotient_group(g, m);
  EXPECT_EQ(second.image().order(), direct.image().order());
  EXPECT_TRUE(same_subgroup(first.preimage(first.image_of(m)), m));
}

TEST(QuotientGroup, WreathByBase)
{
  auto g = wreath_product(alternating_group(5), symmetric_group(2));
  auto base = direct_product(alternating_group(5), alternating_group(5));
  auto hom = quotient_group(g, base);
  EXPECT_EQ(hom.image().order(), 2);
  check_hom(hom);
}

TEST(ActionOnFactors, WreathSwapsCoordinates)
{
  auto g = wreath_product(alternating_group(5), symmetric_group(2));
  auto a = alternating_group(5);
  auto first = direct_product(a, PermGroup::trivial(5));
  auto second = direct_product(PermGroup::trivial(5), a);
  auto hom = kernel_of_action_on_factors(g, {first, second});
  EXPECT_EQ(hom.image().degree(), 2u);
  EXPECT_EQ(hom.image().order(), 2);
  EXPECT_EQ(hom.kernel().order(), 3600);
  check_hom(hom, 10);
}

TEST(ActionOnFactors, DirectProductFixesCoordinates)
{
  auto a = alternating_group(5);
  auto g = direct_product(a, a);
  auto first = direct_product(a, PermGroup::trivial(5));
  auto second = direct_product(PermGroup::trivial(5), a);
  auto hom = kernel_of_action_on_factors(g, {first, second});
  EXPECT_TRUE(hom.image().is_trivial());
  EXPECT_EQ(hom.kernel().order(), 3600);
}

TEST(ActionOnFactors, NotPermuted)
{
  auto g = symmetric_group(4);
  PermGroup h(4, {P("(1 2)", 4)});
  try {
    kernel_of_action_on_factors(g, {h});
    ADD_FAILURE() << "expected NotPermuted";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPermuted);
  }
}
