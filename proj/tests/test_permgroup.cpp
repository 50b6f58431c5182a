#include <gtest/gtest.h>

#include <random>
#include <set>

#include "scott_brauer/error.hpp"
#include "scott_brauer/permgroup.hpp"

using namespace sb;

namespace {

Group s4() {
  return Group::from_generators(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})});
}

Group d8() {
  return Group::from_generators(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
}

Perm random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

}  // namespace

TEST(Perm, ComposesRightToLeft) {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  // (a*b)(1) = a(b(1)) = a(2) = 2
  EXPECT_EQ((a * b)[1], 2);
  EXPECT_EQ((a * b)[0], 1);
}

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), ParseError);
}

TEST(Perm, RandomGroupLaws) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 9;
    Perm a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE(a.pow(static_cast<long>(a.order())).is_identity());
    EXPECT_EQ(a.pow(-1), a.inverse());
    EXPECT_EQ(b.conjugated_by(a), a * b * a.inverse());
  }
}

TEST(Group, Orders) {
  EXPECT_EQ(s4().order(), 24u);
  EXPECT_EQ(d8().order(), 8u);
  EXPECT_EQ(Group::trivial(5).order(), 1u);
  EXPECT_TRUE(d8().is_p_group(2));
  EXPECT_FALSE(s4().is_p_group(2));
  EXPECT_EQ(s4().exponent(), 12u);
}

TEST(Group, WordsEvaluateToElements) {
  Group g = s4();
  for (std::size_t i = 0; i < g.order(); ++i) {
    Perm x = Perm::identity(4);
    for (std::size_t k : g.word(i)) x = x * g.generators()[k];
    EXPECT_EQ(x, g.element(i));
  }
}

TEST(Group, OrderCapIsResourceError) {
  std::vector<Perm> gens{Perm::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}), Perm::from_cycles(9, {{0, 1}})};
  EXPECT_THROW(Group::from_generators(9, gens, 1000), ResourceError);
}

TEST(Group, SubgroupCounts) {
  // D8 has 10 subgroups, S4 has 30.
  EXPECT_EQ(subgroups_between(Group::trivial(4), d8()).size(), 10u);
  auto all = subgroups_between(Group::trivial(4), s4());
  EXPECT_EQ(all.size(), 30u);
  // 11 conjugacy classes of subgroups in S4
  EXPECT_EQ(conjugacy_class_reps(all, s4()).size(), 11u);
}

TEST(Group, LagrangeAndCosets) {
  Group g = s4();
  for (const auto& h : subgroups_between(Group::trivial(4), g)) {
    EXPECT_EQ(g.order() % h.order(), 0u);
    auto reps = left_coset_reps(g, h);
    EXPECT_EQ(reps.size() * h.order(), g.order());
    std::set<Perm> seen;
    for (const auto& x : reps)
      for (const auto& y : h.elements()) seen.insert(x * y);
    EXPECT_EQ(seen.size(), g.order());
  }
}

TEST(Group, NormalizersCentralizersSylow) {
  Group g = s4();
  Group p = sylow_subgroup(g, 2);
  EXPECT_EQ(p.order(), 8u);
  EXPECT_EQ(normalizer(g, p), p);
  EXPECT_EQ(sylow_subgroup(g, 3).order(), 3u);
  EXPECT_EQ(normalizer(g, sylow_subgroup(g, 3)).order(), 6u);
  EXPECT_EQ(o_p(g, 2).order(), 4u);
  EXPECT_EQ(o_p(g, 3).order(), 1u);
  EXPECT_EQ(centralizer(g, g).order(), 1u);
  Group v4 = o_p(g, 2);
  EXPECT_TRUE(is_normal(v4, g));
  EXPECT_EQ(centralizer(g, v4), v4);
}

TEST(Group, MaximalSubgroupsOfPGroups) {
  EXPECT_EQ(maximal_subgroups(d8()).size(), 3u);
  Group c2c2 = Group::from_generators(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  EXPECT_EQ(maximal_subgroups(c2c2).size(), 3u);
  EXPECT_EQ(maximal_subgroups(Group::trivial(4)).size(), 0u);
}

TEST(Group, IntervalCorrespondence) {
  Group g = s4();
  Group p = sylow_subgroup(g, 2);
  Group r = o_p(g, 2);
  for (const auto& q : subgroups_between(Group::trivial(4), p)) {
    if (!is_subgroup(r, normalizer(g, q))) continue;
    auto pairs = interval_correspondence(q, r);
    for (const auto& [k, kr] : pairs) {
      auto reps = compatible_coset_reps(q, k, r);
      EXPECT_EQ(reps.size() * k.order(), q.order());
    }
  }
}

TEST(Group, ConjugacyAndDirectProducts) {
  Group g = s4();
  Group a = Group::from_generators(4, {Perm::from_cycles(4, {{0, 1}})});
  Group b = Group::from_generators(4, {Perm::from_cycles(4, {{2, 3}})});
  Group c = Group::from_generators(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}})});
  EXPECT_TRUE(are_conjugate(a, b, g));
  EXPECT_FALSE(are_conjugate(a, c, g));
  Group dp = direct_product(d8(), s4());
  EXPECT_EQ(dp.order(), 8u * 24u);
  EXPECT_EQ(diagonal_subgroup(d8()).order(), 8u);
  Group reg = regular_representation(s4());
  EXPECT_EQ(reg.order(), 24u);
  EXPECT_EQ(reg.degree(), 24u);
}
