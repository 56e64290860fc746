#include <gtest/gtest.h>

#include "premon/errors.hpp"
#include "premon/rational.hpp"
#include "premon/records.hpp"
#include "premon/tri.hpp"

using namespace premon;

namespace {
const Tri kAll[] = {Tri::False, Tri::True, Tri::Unknown};
}

TEST(Tri, KleeneTables) {
  for (Tri a : kAll) {
    for (Tri b : kAll) {
      const bool any_false = a == Tri::False || b == Tri::False;
      const bool all_true = a == Tri::True && b == Tri::True;
      EXPECT_EQ(a && b, any_false ? Tri::False : all_true ? Tri::True : Tri::Unknown);
      EXPECT_EQ(a || b, !(!a && !b));
      EXPECT_EQ(a && b, b && a);
    }
  }
  EXPECT_EQ(!Tri::Unknown, Tri::Unknown);
  EXPECT_EQ(to_tri(true), Tri::True);
}

TEST(Tri, StringRoundTrip) {
  for (Tri t : kAll) EXPECT_EQ(tri_from_string(to_string(t)), t);
  EXPECT_THROW(tri_from_string("maybe"), ParseError);
}

TEST(Rational, ParseReducesAndPrints) {
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(8, 4)), "2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, PowMatchesRepeatedProduct) {
  const Rational r(3, 5);
  Rational acc = 1;
  for (std::size_t i = 0; i < 40; ++i) {
    EXPECT_EQ(pow(r, i), acc);
    acc *= r;
  }
}

TEST(Budget, ValidateRejectsZeroFields) {
  SearchBudget b;
  EXPECT_NO_THROW(b.validate());
  b.node_cap = 0;
  EXPECT_THROW(b.validate(), ValidationError);
  EXPECT_EQ(SearchBudget{}.scaled(2).chain_depth, 60U);
}

TEST(Degree, FiniteRequiresTwo) {
  EXPECT_THROW(Degree::finite(1), ValidationError);
  EXPECT_EQ(Degree::finite(3).max_factors(SearchBudget{}), 3U);
  EXPECT_EQ(Degree::infinity().max_factors(SearchBudget{}), 6U);
  EXPECT_EQ(degree_from_string("inf"), Degree::infinity());
  EXPECT_EQ(degree_from_string(to_string(Degree::finite(5))), Degree::finite(5));
}

TEST(Height, StringRoundTrip) {
  EXPECT_EQ(Height::exact(3).to_string(), "3");
  EXPECT_EQ(Height::at_least(5).to_string(), ">= 5");
  EXPECT_EQ(height_from_string(">= 5"), Height::at_least(5));
  EXPECT_EQ(height_from_string("0"), Height::exact(0));
}

TEST(Records, ClassificationJsonRoundTrip) {
  ClassificationRecord r;
  r.family = "puiseux";
  r.element = "2";
  r.is_quark = Tri::False;
  r.quark_witness = "1";
  r.irreducible = {{"2", Tri::False}, {"3", Tri::Unknown}, {"inf", Tri::False}};
  r.height = ">= 30";
  r.artinian = Tri::False;
  r.strongly_artinian = Tri::False;
  r.chain = {"2", "4/3", "8/9"};
  EXPECT_EQ(classification_from_json(to_json(r)), r);
  EXPECT_EQ(classification_from_json(nlohmann::json::parse(to_json(r).dump())), r);
}

TEST(Records, FactorizationJsonRoundTrip) {
  FactorizationRecord f;
  f.target = "2";
  f.factors = {"1", "1"};
  f.degree = "2";
  f.splits = {{"2", {"1", "1"}}};
  EXPECT_EQ(factorization_from_json(to_json(f)), f);
}
