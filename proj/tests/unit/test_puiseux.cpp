#include <gtest/gtest.h>

#include "oracles.hpp"
#include "premon/puiseux.hpp"

using namespace premon;
using premon::puiseux::PuiseuxMonoid;

namespace {

struct Params {
  long a;
  long b;
};

const Params kParams[] = {{2, 3}, {3, 5}, {1, 2}, {2, 5}, {3, 4}, {1, 3}};

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

long ipow(long base, std::size_t e) {
  long out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Rationals n / b^k with k <= 2 and value at most 3.
std::vector<std::pair<long, long>> sample(const Params& p) {
  std::vector<std::pair<long, long>> out;
  for (std::size_t k = 0; k <= 2; ++k) {
    const long den = ipow(p.b, k);
    for (long n = 0; n <= 3 * den; ++n)
      if (k == 0 || n % p.b != 0) out.emplace_back(n, den);
  }
  return out;
}

}  // namespace

TEST(Puiseux, ConstructorValidates) {
  EXPECT_THROW(PuiseuxMonoid(2, 4), ValidationError);
  EXPECT_THROW(PuiseuxMonoid(3, 2), ValidationError);
  EXPECT_THROW(PuiseuxMonoid(0, 1), ValidationError);
  EXPECT_THROW(PuiseuxMonoid(-1, 2), ValidationError);
  EXPECT_NO_THROW(PuiseuxMonoid(2, 3));
}

TEST(Puiseux, BoundedMembershipMatchesCoinOracle) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    const oracle::PuiseuxOracle o{p.a, p.b};
    for (const auto& [n, d] : sample(p)) {
      for (std::size_t cap = 0; cap <= 3; ++cap) {
        EXPECT_EQ(h.member_bounded(frac(n, d), cap).has_value(), o.member(n, d, cap))
            << n << "/" << d << " r=" << p.a << "/" << p.b << " cap=" << cap;
      }
    }
  }
}

TEST(Puiseux, LengthSetsMatchExhaustiveEnumeration) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    const oracle::PuiseuxOracle o{p.a, p.b};
    for (const auto& [n, d] : sample(p)) {
      if (n > 2 * d) continue;
      for (std::size_t cap = 0; cap <= 3; ++cap) {
        const auto got = h.length_set_bounded(frac(n, d), cap);
        const auto want = o.lengths(n, d, cap);
        ASSERT_EQ(got.size(), want.size()) << n << "/" << d << " r=" << p.a << "/" << p.b << " cap=" << cap;
        EXPECT_TRUE(std::equal(got.begin(), got.end(), want.begin(),
                               [](std::size_t x, std::int64_t y) { return static_cast<std::int64_t>(x) == y; }));
      }
    }
  }
}

TEST(Puiseux, CanonicalRepresentation) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    for (const auto& [n, d] : sample(p)) {
      const Rational q = frac(n, d);
      const auto rep = h.canonical(q);
      if (!rep) continue;
      EXPECT_EQ(rep->value(h), q);
      for (std::size_t i = 1; i < rep->coefficients.size(); ++i) {
        EXPECT_GE(rep->coefficients[i], 0);
        EXPECT_LT(rep->coefficients[i], p.b);
      }
      // the canonical form is found at its own top exponent
      EXPECT_TRUE(h.member_bounded(q, rep->exponent_bound()).has_value());
    }
    EXPECT_FALSE(h.contains(Rational(-1)));
    EXPECT_FALSE(h.contains(Rational(1, p.b + 1)));
  }
}

TEST(Puiseux, LongestRepresentationRealizesMaxLength) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    for (const auto& [n, d] : sample(p)) {
      const Rational q = frac(n, d);
      for (std::size_t cap = 0; cap <= 4; ++cap) {
        const auto lengths = h.length_set_bounded(q, cap);
        const auto rep = h.longest_representation(q, cap);
        ASSERT_EQ(rep.has_value(), !lengths.empty());
        if (!rep) continue;
        EXPECT_EQ(rep->value(h), q);
        EXPECT_EQ(rep->length(), Integer(static_cast<unsigned long>(lengths.back())));
      }
    }
  }
}

TEST(Puiseux, FiniteMaxLengthAgreesWithGrowth) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    for (const auto& [n, d] : sample(p)) {
      const Rational q = frac(n, d);
      if (!h.contains(q)) {
        EXPECT_THROW((void)h.finite_max_length(q), ValidationError);
        continue;
      }
      const std::size_t m = h.canonical(q)->exponent_bound();
      const auto fin = h.finite_max_length(q);
      const auto s1 = h.length_set_bounded(q, m + 4);
      const auto s2 = h.length_set_bounded(q, m + 5);
      if (fin) {
        EXPECT_EQ(s1, s2);
        EXPECT_EQ(s1.back(), *fin);
      } else {
        EXPECT_LT(s1.size(), s2.size());
      }
    }
  }
}

TEST(Puiseux, AccpVerdictsAreCertified) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    for (const auto& [n, d] : sample(p)) {
      const Rational q = frac(n, d);
      if (!h.contains(q) || q == 0) continue;
      for (std::size_t cap : {2, 4, 8}) {
        const auto v = h.satisfies_accp_element(q, cap);
        if (v.verdict == Tri::False) {
          ASSERT_TRUE(v.witness_index.has_value());
          EXPECT_LE(*v.witness_index, cap);
          EXPECT_TRUE(h.contains(q - Rational(p.a) * h.generator(*v.witness_index)));
          EXPECT_FALSE(h.finite_max_length(q).has_value());
        } else if (v.verdict == Tri::True) {
          EXPECT_TRUE(h.finite_max_length(q).has_value());
        }
      }
    }
  }
  EXPECT_THROW((void)PuiseuxMonoid(2, 3).satisfies_accp_element(Rational(1, 7), 8), ValidationError);
}

TEST(Puiseux, FrozenAccpExamples) {
  const PuiseuxMonoid h(2, 3);
  const auto two = h.satisfies_accp_element(2, 8);
  EXPECT_EQ(two.verdict, Tri::False);
  EXPECT_EQ(two.witness_index, std::optional<std::size_t>(0));
  EXPECT_EQ(h.satisfies_accp_element(1, 6).verdict, Tri::True);
  // lengths of 2 = 2 r^0: {2, 3, 4, ...} grows by one per cap
  EXPECT_EQ(h.length_set_bounded(2, 1), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(h.length_set_bounded(2, 3), (std::vector<std::size_t>{2, 3, 4, 5}));
}

TEST(Puiseux, DivisibilityIsDifferenceMembership) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    const auto xs = sample(p);
    for (std::size_t i = 0; i < xs.size(); i += 3) {
      for (std::size_t j = 0; j < xs.size(); j += 5) {
        const Rational x(xs[i].first, xs[i].second);
        const Rational y(xs[j].first, xs[j].second);
        const bool exact = h.divides(x, y);
        EXPECT_EQ(exact, y >= x && h.contains(y - x));
        const Tri bounded = h.divides_bounded(x, y, 1);
        if (is_definite(bounded)) EXPECT_EQ(bounded, to_tri(exact));
        EXPECT_EQ(h.divides_bounded(x, y, 6), to_tri(exact));
      }
    }
  }
}

TEST(Puiseux, ElementsBelowMatchesOracle) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    const oracle::PuiseuxOracle o{p.a, p.b};
    const Rational x(2 * p.b + 1, p.b);
    const auto below = h.elements_below(x, 1, 1'000'000);
    EXPECT_EQ(below.truncated, !h.finite_max_length(x).has_value());
    std::vector<Rational> want;
    for (long n = 2 * p.b + 1; n >= 0; --n)
      if (o.member(n, p.b, 1)) want.push_back(frac(n, p.b));
    EXPECT_EQ(below.items, want);
  }
}

TEST(Puiseux, DecreasingChainIsStrict) {
  for (const auto& p : kParams) {
    const PuiseuxMonoid h(p.a, p.b);
    const auto chain = h.decreasing_chain(12);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      EXPECT_TRUE(h.divides(chain[i], chain[i - 1]));
      EXPECT_FALSE(h.divides(chain[i - 1], chain[i]));
    }
  }
}

TEST(Puiseux, ChainFromShiftedElement) {
  const PuiseuxMonoid h(2, 3);
  const Rational x = Rational(2) * h.generator(2) + 1;
  const auto chain = h.chain_from(x, 6, 8);
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->front(), x);
  for (std::size_t i = 1; i < chain->size(); ++i) {
    EXPECT_TRUE(h.divides((*chain)[i], (*chain)[i - 1]));
    EXPECT_FALSE(h.divides((*chain)[i - 1], (*chain)[i]));
  }
  EXPECT_FALSE(h.chain_from(1, 4, 8).has_value());
}

TEST(Puiseux, AtomsAreGeneratorsInAtomicRegime) {
  const PuiseuxMonoid h(2, 3);
  for (std::size_t i = 0; i <= 5; ++i) EXPECT_TRUE(h.is_atom(h.generator(i)));
  EXPECT_FALSE(h.is_atom(2));
  EXPECT_FALSE(h.is_atom(Rational(5, 3)));
  const PuiseuxMonoid half(1, 2);
  EXPECT_FALSE(half.atomic_regime());
  for (std::size_t i = 0; i <= 5; ++i) EXPECT_FALSE(half.is_atom(half.generator(i)));
}

TEST(Puiseux, PremonClassification) {
  const PuiseuxMonoid h(2, 3);
  const auto p = puiseux::make_premon(h);
  const SearchBudget b;
  const auto one = classify(p, Rational(1), b);
  EXPECT_EQ(one.is_quark, Tri::True);
  EXPECT_EQ(one.height, Height::exact(1));
  EXPECT_EQ(one.artinian, Tri::True);
  const auto two = classify(p, Rational(2), b);
  EXPECT_EQ(two.is_quark, Tri::False);
  EXPECT_EQ(two.height, Height::at_least(30));
  EXPECT_EQ(two.artinian, Tri::False);
  EXPECT_EQ(two.strongly_artinian, Tri::False);
  ASSERT_GE(two.chain.size(), 4U);
  EXPECT_EQ(two.chain[1], Rational(4, 3));
  EXPECT_EQ(certify_chain<Rational>(p, two.chain, b), Tri::True);
  EXPECT_TRUE(is_preorder_unit(p, Rational(0), b));
}

TEST(Puiseux, JsonRoundTrip) {
  const PuiseuxMonoid h(3, 5);
  EXPECT_EQ(puiseux::monoid_from_json(puiseux::to_json(h)), h);
  EXPECT_THROW((void)puiseux::monoid_from_json(nlohmann::json{{"a", "4"}, {"b", "2"}}), Error);
}

TEST(Puiseux, DenominatorDividingAPowerOfB) {
  const PuiseuxMonoid h(3, 4);
  // 3/2 = 2 * (3/4); its denominator 2 divides 4 without being a power of 4
  EXPECT_EQ(h.denominator_exponent(frac(3, 2)), std::optional<std::size_t>(1));
  EXPECT_TRUE(h.contains(frac(3, 2)));
  EXPECT_EQ(h.denominator_exponent(frac(1, 8)), std::optional<std::size_t>(2));
  EXPECT_FALSE(h.contains(frac(1, 8)));
  EXPECT_EQ(h.denominator_exponent(frac(1, 3)), std::nullopt);
}
