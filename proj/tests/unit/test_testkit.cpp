#include <gtest/gtest.h>

#include "oracles.hpp"
#include "premon/testkit.hpp"

using namespace premon;
using namespace premon::testkit;

TEST(Generators, CountsPerMode) {
  EXPECT_EQ(gen_finite_premons(3, {PreorderMode::Divisibility}).size(), 7U);
  EXPECT_EQ(gen_finite_premons(3, {PreorderMode::Discrete}).size(), 7U);
  EXPECT_EQ(gen_finite_premons(3, {PreorderMode::Random, 9, 0.5, 5}).size(), 35U);
  EXPECT_THROW((void)gen_finite_premons(2, {PreorderMode::Random, 1, 1.5, 1}), ValidationError);
}

TEST(Generators, DeterministicAndReplayable) {
  const GenOptions opts{PreorderMode::Random, 42, 0.4, 20};
  const auto a = gen_finite_premons(3, opts);
  const auto b = gen_finite_premons(3, opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].preorder, b[i].preorder);
    ASSERT_TRUE(a[i].provenance.seed.has_value());
    // the recorded seed alone reproduces the relation
    EXPECT_EQ(random_preorder(3, *a[i].provenance.seed, a[i].provenance.density), a[i].preorder);
    EXPECT_TRUE(a[i].preorder.is_reflexive());
    EXPECT_TRUE(a[i].preorder.is_transitive());
  }
  EXPECT_NE(instance_seed(42, 0, 0), instance_seed(42, 0, 1));
  EXPECT_NE(instance_seed(42, 0, 0), instance_seed(43, 0, 0));
}

TEST(Generators, DensityExtremes) {
  const auto empty = random_preorder(4, 1, 0.0);
  const auto full = random_preorder(4, 1, 1.0);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      EXPECT_EQ(empty(x, y), x == y);
      EXPECT_TRUE(full(x, y));
    }
}

TEST(Generators, RandomPreordersCoverAllPreorders) {
  // with enough draws every preorder on 3 points shows up
  std::set<std::vector<std::vector<bool>>> seen;
  for (std::uint64_t s = 0; s < 4000; ++s) {
    const auto r = random_preorder(3, s, 0.4);
    std::vector<std::vector<bool>> m(3, std::vector<bool>(3));
    for (Element x = 0; x < 3; ++x)
      for (Element y = 0; y < 3; ++y) m[x][y] = r(x, y);
    seen.insert(m);
  }
  EXPECT_EQ(seen.size(), oracle::all_preorders(3).size());
}

TEST(Instances, JsonRoundTrip) {
  for (const auto& inst : gen_finite_premons(3, {PreorderMode::Random, 5, 0.5, 3})) {
    const auto back = instance_from_json(nlohmann::json::parse(to_json(inst).dump()));
    EXPECT_EQ(back.monoid, inst.monoid);
    EXPECT_EQ(back.preorder, inst.preorder);
    EXPECT_EQ(back.provenance, inst.provenance);
  }
  EXPECT_THROW((void)instance_from_json(nlohmann::json::object()), ParseError);
}

TEST(Suites, FiniteSuitesPassOnSmallOrders) {
  const SearchBudget b;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto insts = gen_finite_premons(n, {PreorderMode::Divisibility});
    const auto rnd = gen_finite_premons(n, {PreorderMode::Random, 77, 0.5, 10});
    insts.insert(insts.end(), rnd.begin(), rnd.end());
    for (const auto& inst : insts) {
      EXPECT_TRUE(verify_lemma(inst, {Degree::finite(2), Degree::finite(3), Degree::finite(6)}, b).ok());
      EXPECT_TRUE(verify_corollary_factorable(inst, b).ok());
      EXPECT_TRUE(verify_heights(inst, b).ok());
      EXPECT_TRUE(verify_local_ladder(inst, b).ok());
    }
  }
}

TEST(Suites, ReportJsonCarriesCounts) {
  const auto inst = gen_finite_premons(2, {PreorderMode::Divisibility}).front();
  const auto j = verify_heights(inst, SearchBudget{}).to_json();
  EXPECT_EQ(j.at("suite"), "heights");
  EXPECT_EQ(j.at("counts").at("fail"), 0);
  EXPECT_EQ(j.at("counts").at("pass"), 2);
  EXPECT_EQ(instance_from_json(j.at("provenance")).monoid, inst.monoid);
}

TEST(Suites, ReportCountsFailures) {
  VerificationReport r;
  r.add("a", true);
  r.add("b", false, "broken", nlohmann::json{{"x", 1}});
  r.skip("c", "n/a");
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.count(Verdict::Fail), 1U);
  EXPECT_EQ(r.count(Verdict::Skipped), 1U);
  EXPECT_EQ(r.to_json().at("claims").at(1).at("witness").at("x"), 1);
}

TEST(Suites, PuiseuxAndPoly) {
  const SearchBudget b;
  EXPECT_TRUE(verify_corollary_factorable_puiseux(2, 3, b).ok());
  EXPECT_TRUE(verify_corollary_factorable_puiseux(3, 5, b).ok());
  const auto skipped = verify_corollary_factorable_puiseux(1, 2, b);
  EXPECT_EQ(skipped.count(Verdict::Skipped), 1U);

  const auto atomic = verify_corollary_acyclic_accp_puiseux(2, 3, b);
  EXPECT_TRUE(atomic.ok());
  EXPECT_EQ(atomic.conclusion, "atomic, generated by ACCP elements");
  const auto antimatter = verify_corollary_acyclic_accp_puiseux(1, 2, b);
  EXPECT_TRUE(antimatter.ok());
  EXPECT_EQ(antimatter.conclusion, "not atomic, generators fail ACCP");

  const auto poly = verify_corollary_acyclic_accp_poly(b);
  EXPECT_TRUE(poly.ok());
  EXPECT_EQ(poly.conclusion, "hypothesis fails, monoid non-atomic");
}

TEST(NonQuark, WitnessIsIrreducibleButNotQuark) {
  const SearchBudget b;
  const auto w = find_irreducible_non_quark(4, 50, 1, b);
  ASSERT_TRUE(w.has_value());
  oracle::Rel rel(w->instance.monoid.size(), std::vector<bool>(w->instance.monoid.size()));
  for (Element x = 0; x < rel.size(); ++x)
    for (Element y = 0; y < rel.size(); ++y) rel[x][y] = w->instance.preorder(x, y);
  const oracle::FinitePremon o{w->instance.monoid.table(), w->instance.monoid.identity(), rel};
  EXPECT_FALSE(o.unit(w->element));
  EXPECT_FALSE(o.quark(w->element));
  EXPECT_TRUE(o.irreducible(w->element, 2));
  EXPECT_TRUE(o.strict(w->below, w->element));
  EXPECT_FALSE(o.unit(w->below));
}
