#include <gtest/gtest.h>

#include "scott_brauer/brauer.hpp"
#include "scott_brauer/error.hpp"
#include "scott_brauer/fixtures.hpp"

using namespace sb;
using namespace sb::fixtures;

namespace {

const Field& f2() {
  static const Field f = Field::make(2);
  return f;
}

}  // namespace

TEST(Brauer, SymmetricGroupExample) {
  auto s = s4();
  Module m = scott_module(s.g, s.p, f2());
  EXPECT_EQ(m.dim, 2u);
  EXPECT_EQ(outer_automizer_order(s.g, s.p), 6u);
  auto rep = is_brauer_indecomposable_definition(m, s.p);
  EXPECT_FALSE(rep.overall);
  EXPECT_EQ(rep.overall, rep.recompute_overall());
  bool witnessed_at_p = false;
  for (const auto& r : rep.records)
    if (r.q == s.p) witnessed_at_p = r.verdict == Verdict::decomposable && r.brauer_dim == 2;
  EXPECT_TRUE(witnessed_at_p);
  // p | |N_G(P) : P C_G(P)|, so neither shortcut applies
  EXPECT_FALSE(check_lemma_kernel(m, s.p).has_value());
  EXPECT_FALSE(check_corollary_index_p(m, s.p).has_value());
  EXPECT_FALSE(saturation_criterion(s.g, s.p, 2));
  EXPECT_FALSE(check_corollary_normal(m, s.p).has_value());
  auto th = check_theorem_main(m, s.p);
  EXPECT_FALSE(th.verdict);
  EXPECT_TRUE(th.agrees);
}

TEST(Brauer, D8xA4FirstExample) {
  auto e = example_3_4();
  const Group& g = e.base.g;
  Module m = perm_module(g, e.p, f2());
  EXPECT_EQ(m.dim, 12u);
  EXPECT_TRUE(is_indecomposable(m));
  EXPECT_TRUE(is_subgroup(e.r, module_kernel(m)));
  Module res = restrict(m, centralizer(g, e.r));
  EXPECT_GE(decompose(res).summands.size(), 2u);

  auto mp = brauer_construction(m, e.p);
  EXPECT_TRUE(is_indecomposable(restrict(mp, centralizer(g, e.p))));
  auto mq = brauer_construction(m, e.q);
  EXPECT_TRUE(is_indecomposable(restrict(mq, centralizer(g, e.q))));

  auto rep = is_brauer_indecomposable_definition(m, e.p);
  EXPECT_FALSE(rep.overall);
  auto th = check_theorem_main(m, e.p);
  EXPECT_FALSE(th.verdict);
  auto ip = check_corollary_index_p(m, e.p);
  ASSERT_TRUE(ip.has_value());
  EXPECT_FALSE(ip->verdict);
  EXPECT_EQ(ip->r, e.r);

  auto ev = verify_product_with_r(m, e.q, e.r);
  EXPECT_EQ(ev.qr, e.p);
  EXPECT_EQ(ev.dim_q, ev.dim_qr);
  EXPECT_TRUE(ev.iso_ok);
  EXPECT_TRUE(ev.qr_restricted_indecomposable);
  EXPECT_TRUE(ev.q_restricted_indecomposable);
}

TEST(Brauer, D8xA4SecondExample) {
  auto e = example_3_5();
  const Group& g = e.base.g;
  Module m = perm_module(g, e.p, f2());
  EXPECT_EQ(m.dim, 6u);
  EXPECT_TRUE(is_indecomposable(m));
  EXPECT_EQ(outer_automizer_order(g, e.p), 1u);
  EXPECT_TRUE(is_indecomposable(restrict(m, centralizer(g, e.r))));
  auto rep = is_brauer_indecomposable_definition(m, e.p);
  EXPECT_TRUE(rep.overall);
  auto th = check_theorem_main(m, e.p);
  EXPECT_TRUE(th.verdict);
  ASSERT_TRUE(th.witness.has_value());
  EXPECT_EQ(*th.witness, e.r);
  auto ip = check_corollary_index_p(m, e.p);
  ASSERT_TRUE(ip.has_value());
  EXPECT_TRUE(ip->verdict);
}

TEST(Brauer, KernelLemmaDirectProduct) {
  // G = P x C3 with M = k: P <= ker M and p does not divide |N_G(P) : P C_G(P)|
  Group g = direct_product(cyclic_group(2), cyclic_group(3));
  Group p = sylow_subgroup(g, 2);
  Module k = trivial_module(g, f2());
  auto v = check_lemma_kernel(k, p);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(*v);
  EXPECT_TRUE(saturation_criterion(g, p, 2));
  EXPECT_EQ(check_corollary_normal(k, p), std::optional<bool>(true));
}

TEST(Brauer, TrivialGroupIsVacuouslyTrue) {
  Group g = Group::trivial(1);
  Module k = trivial_module(g, f2());
  EXPECT_TRUE(is_brauer_indecomposable_definition(k, g).overall);
  EXPECT_TRUE(check_theorem_main(k, g).verdict);
}

TEST(Brauer, RejectsWrongVertex) {
  auto s = s4();
  Module m = scott_module(s.g, s.p, f2());
  EXPECT_THROW(is_brauer_indecomposable_definition(m, sylow_subgroup(s.g, 2)), PreconditionError);
  EXPECT_THROW(check_corollary_normal(m, sylow_subgroup(s.g, 2)), PreconditionError);
}

TEST(Brauer, ConjugacyReductionDoesNotChangeVerdicts) {
  auto e = example_3_4();
  Module m = perm_module(e.base.g, e.p, f2());
  BrauerOptions all;
  all.conjugacy_reduction = false;
  auto full = is_brauer_indecomposable_definition(m, e.p, all);
  auto red = is_brauer_indecomposable_definition(m, e.p);
  EXPECT_EQ(full.overall, red.overall);
  EXPECT_GT(full.records.size(), red.records.size());
  // every record agrees with the record of its class representative
  for (const auto& r : full.records)
    for (const auto& c : red.records)
      if (c.class_id == r.class_id) {
        EXPECT_EQ(c.verdict, r.verdict);
        EXPECT_EQ(c.brauer_dim, r.brauer_dim);
      }
}

TEST(Brauer, KernelIdentityOnCatalog) {
  // P <= ker M  =>  Res_{N_G(P)} M is isomorphic to M(P)
  std::size_t checked = 0;
  for (const auto& e : bi_catalog()) {
    Field f = Field::make(e.prime);
    Module m = scott_module(e.g, e.p, f);
    if (!is_subgroup(e.p, module_kernel(m))) continue;
    auto bq = brauer_quotient(m, e.p);
    EXPECT_EQ(bq.module.dim, m.dim) << e.name;
    EXPECT_TRUE(is_isomorphic(bq.module, restrict(m, bq.normalizer))) << e.name;
    ++checked;
  }
  EXPECT_GE(checked, 3u);
}

TEST(Brauer, KernelLemmaAndNormalCriterionOnCatalog) {
  std::size_t kernel = 0, normal = 0;
  for (const auto& e : bi_catalog()) {
    Field f = Field::make(e.prime);
    Module m = scott_module(e.g, e.p, f);
    bool def = is_brauer_indecomposable_definition(m, e.p).overall;
    if (auto v = check_lemma_kernel(m, e.p)) {
      EXPECT_TRUE(def) << e.name;
      ++kernel;
    }
    if (is_normal(e.p, e.g)) {
      EXPECT_EQ(saturation_criterion(e.g, e.p, e.prime), def) << e.name;
      auto v = check_corollary_normal(m, e.p);
      if (v) EXPECT_TRUE(def) << e.name;
      ++normal;
    }
  }
  EXPECT_GE(kernel, 2u);
  EXPECT_GE(normal, 3u);
}

TEST(Brauer, ProductWithREveryQ) {
  auto e4 = example_3_4();
  auto e5 = example_3_5();
  struct Case {
    Module m;
    Group p, r;
  };
  std::vector<Case> cases{{perm_module(e4.base.g, e4.p, f2()), e4.p, e4.r},
                          {perm_module(e5.base.g, e5.p, f2()), e5.p, e5.r}};
  for (const auto& c : cases)
    for (const auto& q : subgroups_between(Group::trivial(c.p.degree()), c.p)) {
      auto ev = verify_product_with_r(c.m, q, c.r);
      EXPECT_EQ(ev.dim_q, ev.dim_qr);
      EXPECT_TRUE(ev.iso_ok);
      EXPECT_TRUE(ev.implication_holds);
    }
}

TEST(Brauer, ProductWithRPreconditions) {
  auto e = example_3_4();
  Module m = perm_module(e.base.g, e.p, f2());
  EXPECT_THROW(verify_product_with_r(m, e.q, e.q), PreconditionError);  // not normal
  EXPECT_THROW(verify_product_with_r(m, e.q, e.base.g), PreconditionError);
}
