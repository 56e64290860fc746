#include <random>

#include <gtest/gtest.h>

#include "premon/poly_domain.hpp"

using namespace premon;
using namespace premon::poly;

namespace {

std::vector<Rational> grid() {
  return {Rational(1), Rational(2), Rational(3), Rational(-2), Rational(6),
          Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(3, 2), Rational(-5, 4)};
}

RatPoly random_poly(std::mt19937_64& rng, bool integer_constant) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) {
    Rational v(num(rng), i == 0 && integer_constant ? 1 : den(rng));
    v.canonicalize();
    c.push_back(v);
  }
  if (c.back() == 0) c.back() = 1;
  return RatPoly(c);
}

// Schoolbook division written out independently: quotient of g by f when exact.
std::optional<RatPoly> exact_quotient(const RatPoly& g, const RatPoly& f) {
  std::vector<Rational> rem = g.coefficients();
  const auto& fc = f.coefficients();
  if (rem.size() < fc.size()) {
    if (g.is_zero()) return RatPoly();
    return std::nullopt;
  }
  std::vector<Rational> q(rem.size() - fc.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = rem[i + fc.size() - 1] / fc.back();
    for (std::size_t j = 0; j < fc.size(); ++j) rem[i + j] -= q[i] * fc[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return RatPoly(q);
}

}  // namespace

TEST(RatPoly, ArithmeticAndTrim) {
  const auto f = parse_poly("1,2,0,0");
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f, parse_poly("1,2"));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(parse_poly("0,1") * parse_poly("0,1"), parse_poly("0,0,1"));
  EXPECT_EQ(to_string(RatPoly::linear0(Rational(1, 2))), "(1/2)X");
  EXPECT_EQ(to_string(RatPoly()), "0");
  EXPECT_THROW((void)parse_poly("1,x"), ParseError);
}

TEST(RatPoly, DivModIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_poly(rng, false);
    const auto g = random_poly(rng, false);
    const auto [q, r] = divmod(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree());
  }
  EXPECT_THROW((void)divmod(parse_poly("1"), RatPoly()), ValidationError);
}

TEST(Domain, MembershipAndUnits) {
  EXPECT_TRUE(parse_poly("3,1/2").in_domain());
  EXPECT_FALSE(parse_poly("1/2,1").in_domain());
  EXPECT_TRUE(is_unit(parse_poly("-1")));
  EXPECT_FALSE(is_unit(parse_poly("2")));
  EXPECT_FALSE(is_unit(parse_poly("0,1")));
  EXPECT_THROW((void)divides(parse_poly("1/2"), parse_poly("1")), ValidationError);
  EXPECT_THROW((void)divides(RatPoly(), parse_poly("1")), ValidationError);
}

TEST(Domain, LinearGridMatchesQuotientRule) {
  for (const auto& q1 : grid()) {
    for (const auto& q2 : grid()) {
      const bool want = is_integer(Rational(q2 / q1));
      EXPECT_EQ(divides_linear0(q1, q2), want);
      EXPECT_EQ(divides(RatPoly::linear0(q1), RatPoly::linear0(q2)), want);
    }
  }
  EXPECT_FALSE(divides(RatPoly::linear0(1), RatPoly::linear0(Rational(1, 2))));
  EXPECT_TRUE(divides(RatPoly::linear0(Rational(1, 2)), RatPoly::linear0(1)));
}

TEST(Domain, DivisibilityMatchesSchoolbookOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_poly(rng, true);
    const auto h = random_poly(rng, true);
    if (f.is_zero() || h.is_zero()) continue;
    // a product with a cofactor in R is always divisible
    EXPECT_TRUE(divides(f, f * h));
    const auto g = random_poly(rng, true);
    if (g.is_zero()) continue;
    const auto q = exact_quotient(g, f);
    EXPECT_EQ(divides(f, g), q.has_value() && q->in_domain()) << to_string(f) << " | " << to_string(g);
  }
}

TEST(Domain, DescendingChainOfHalves) {
  const auto chain = descending_chain_qX(1, 30);
  ASSERT_EQ(chain.elements.size(), 30U);
  EXPECT_EQ(chain.elements.back(), RatPoly::linear0(pow(Rational(1, 2), 29)));
  EXPECT_TRUE(chain.strictly_decreasing());
  for (const auto& link : chain.links) {
    EXPECT_TRUE(link.forward);
    EXPECT_FALSE(link.reverse);
  }
}

TEST(Domain, QXNeverAtom) {
  for (const auto& q : grid()) {
    const auto c = qX_is_never_atom(q);
    EXPECT_TRUE(c.valid()) << to_string(q);
    EXPECT_EQ(c.factors[0] * c.factors[1], RatPoly::linear0(q));
    EXPECT_EQ(is_atom(RatPoly::linear0(q)), Tri::False);
  }
  EXPECT_THROW((void)qX_is_never_atom(0), ValidationError);
}

TEST(Domain, DivisorShapeOfX) {
  EXPECT_TRUE(check_divisor_shape_of_X({parse_poly("-1"), parse_poly("0,-1")}));
  EXPECT_FALSE(check_divisor_shape_of_X({parse_poly("2"), parse_poly("0,1")}));
  // product X^3
  EXPECT_FALSE(check_divisor_shape_of_X({parse_poly("0,0,1"), parse_poly("0,1")}));
}

TEST(Domain, ConstantAtomsArePrimes) {
  for (long n = 2; n < 60; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    EXPECT_EQ(is_atom(RatPoly::constant(n)), to_tri(prime)) << n;
    EXPECT_EQ(is_atom(RatPoly::constant(-n)), to_tri(prime)) << n;
  }
  EXPECT_EQ(is_atom(parse_poly("1")), Tri::False);
  EXPECT_EQ(is_atom(parse_poly("1,1")), Tri::Unknown);
}

TEST(Domain, PremonChainHook) {
  const auto p = make_premon();
  const SearchBudget b;
  const auto c = classify(p, RatPoly::linear0(1), b);
  EXPECT_EQ(c.artinian, Tri::False);
  EXPECT_EQ(c.height, Height::at_least(30));
  ASSERT_GE(c.chain.size(), 2U);
  EXPECT_EQ(c.chain[1], RatPoly::linear0(Rational(1, 2)));
}

TEST(Json, RoundTrip) {
  const auto f = parse_poly("3,-1/2,0,7/5");
  EXPECT_EQ(poly_from_json(to_json(f)), f);
}
