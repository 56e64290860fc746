#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "premon/finite_monoid.hpp"

using namespace premon;
using namespace premon::finite;

TEST(Validate, RejectsMissingIdentity) {
  try {
    (void)FiniteMonoid::validate({{1, 0}, {0, 0}}, 0);
    FAIL() << "expected NoIdentity";
  } catch (const NoIdentity& e) {
    EXPECT_LT(e.witness(), 2U);
  }
}

TEST(Validate, RejectsNonAssociativeWithWitness) {
  // identity 0; 1*1 = 2, 2*1 = 1, 1*2 = 2, 2*2 = 1: (1*1)*1 = 1, 1*(1*1) = 2
  const Table t{{0, 1, 2}, {1, 2, 2}, {2, 1, 1}};
  try {
    (void)FiniteMonoid::validate(t, 0);
    FAIL() << "expected NotAssociative";
  } catch (const NotAssociative& e) {
    const auto [x, y, z] = e.witness();
    EXPECT_NE(t[t[x][y]][z], t[x][t[y][z]]);
  }
}

TEST(Validate, RejectsBadShape) {
  EXPECT_THROW((void)FiniteMonoid::validate({{0, 1}, {1}}, 0), ValidationError);
  EXPECT_THROW((void)FiniteMonoid::validate({{0, 5}, {5, 0}}, 0), ValidationError);
  EXPECT_THROW((void)FiniteMonoid::validate({}, 0), ValidationError);
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(enumerate_monoids(n).size(), oracle::count_monoids(n)) << "order " << n;
  }
}

TEST(Enumerate, FrozenCounts) {
  // brute-force counts, frozen
  EXPECT_EQ(enumerate_monoids(1).size(), 1U);
  EXPECT_EQ(enumerate_monoids(2).size(), 2U);
  EXPECT_EQ(enumerate_monoids(3).size(), 7U);
  EXPECT_EQ(enumerate_monoids(4).size(), 35U);
}

TEST(Enumerate, OutputIsCanonicalAndDistinct) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto ms = enumerate_monoids(n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      EXPECT_EQ(canonical_form(ms[i]), ms[i]);
      for (std::size_t j = i + 1; j < ms.size(); ++j) EXPECT_FALSE(ms[i] == ms[j]);
    }
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (const auto& m : enumerate_monoids(4)) {
    std::vector<Element> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(relabel(m, perm)), canonical_form(m));
  }
}

TEST(Predicates, AgreeWithBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_monoids(n)) {
      const auto t = m.table();
      const auto e = m.identity();
      EXPECT_EQ(is_group(m), oracle::is_group(t, e));
      EXPECT_EQ(is_acyclic(m), oracle::is_acyclic(t, e));
      const auto d = divisibility(m);
      const auto od = oracle::divisibility(t);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) EXPECT_EQ(d(x, y), od[x][y]);
        const auto as = atoms(m);
        EXPECT_EQ(std::count(as.begin(), as.end(), x) == 1, oracle::is_atom(t, e, x));
      }
    }
  }
}

TEST(Predicates, AcyclicIffGroupOnFiniteCarriers) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_monoids(n)) EXPECT_EQ(is_acyclic(m), is_group(m));
}

TEST(Fixtures, BooleanAnd) {
  const auto m = boolean_and();
  EXPECT_EQ(m.identity(), 0U);
  EXPECT_EQ(m(1, 1), 1U);
  EXPECT_TRUE(atoms(m).empty());
  EXPECT_FALSE(is_acyclic(m));
  EXPECT_FALSE(is_atomic(m));
}

TEST(Fixtures, CyclicGroups) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_TRUE(is_group(zmod_add(n)));
    EXPECT_TRUE(is_cancellative(zmod_add(n)));
  }
  EXPECT_EQ(units(zmod_mult(6)).size(), 2U);
}

TEST(Accp, FiniteCarrierAlwaysSatisfies) {
  for (const auto& m : enumerate_monoids(3)) {
    for (Element x = 0; x < 3; ++x) {
      const auto c = element_satisfies_accp(m, x);
      EXPECT_TRUE(c.satisfies);
      ASSERT_FALSE(c.longest_chain.empty());
      EXPECT_EQ(c.longest_chain.front(), x);
      // each ideal strictly contains the previous one
      for (std::size_t i = 1; i < c.longest_chain.size(); ++i) {
        EXPECT_TRUE(oracle::divides(m.table(), c.longest_chain[i], c.longest_chain[i - 1]));
        EXPECT_FALSE(oracle::divides(m.table(), c.longest_chain[i - 1], c.longest_chain[i]));
      }
    }
  }
}

TEST(Relation, ClosureIsSmallestPreorder) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    Relation r(4);
    for (Element x = 0; x < 4; ++x)
      for (Element y = 0; y < 4; ++y) r.set(x, y, coin(rng));
    const auto c = r.closure();
    EXPECT_TRUE(c.is_reflexive());
    EXPECT_TRUE(c.is_transitive());
    for (Element x = 0; x < 4; ++x)
      for (Element y = 0; y < 4; ++y)
        if (r(x, y)) EXPECT_TRUE(c(x, y));
    EXPECT_EQ(c.closure(), c);
  }
}

TEST(Premons, MatrixPremonValidates) {
  const auto m = zmod_add(2);
  Relation bad(2);
  EXPECT_THROW((void)matrix_premon(m, bad), ValidationError);
  Relation wrong_size(3);
  EXPECT_THROW((void)matrix_premon(m, wrong_size.closure()), ValidationError);
}

TEST(Json, RoundTrip) {
  for (const auto& m : enumerate_monoids(3)) EXPECT_EQ(monoid_from_json(to_json(m)), m);
  EXPECT_THROW((void)monoid_from_json(nlohmann::json{{"size", 2}}), Error);
}
