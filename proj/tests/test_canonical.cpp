#include <gtest/gtest.h>

#include "grasspi/canonical.hpp"
#include "grasspi/error.hpp"
#include "grasspi/oracle.hpp"
#include "grasspi/text.hpp"

using namespace grasspi;

namespace {

FieldPtr f3() { return Field::prime(3); }
FreePoly x(Var i) { return FreePoly::variable(f3(), i); }
FreePoly P(const char* s) { return parse_poly(s, f3()); }

FreePoly t3() {
  std::vector<FreePoly> xs{x(1), x(2), x(3)};
  return left_normed(xs);
}

bool in_t3(const FreePoly& f) {
  SpanProblem prob{f, {{t3(), Closure::kTIdeal}}};
  return bounded_span_member(prob).member;
}

SSTerm beg(std::vector<BegFactor> b) { return SSTerm(std::move(b), {}); }

}  // namespace

TEST(Straighten, Transposition) {
  const SSCombination s = straighten(x(2) * x(1));
  EXPECT_EQ(s.terms().size(), 2u);
  EXPECT_EQ(s.coefficient(beg({{1, 1}, {2, 1}})), 1u);
  EXPECT_EQ(s.coefficient(SSTerm({}, {{1, 2, 0, 0}})), 2u);
  EXPECT_EQ(s.to_poly(), x(2) * x(1));
}

TEST(Straighten, PthPowerCommutatorVanishes) {
  EXPECT_TRUE(straighten(commutator(x(1).pow(3), x(2))).is_zero());
  EXPECT_FALSE(straighten(commutator(x(1).pow(2), x(2))).is_zero());
}

TEST(Straighten, TwoStepExample) {
  const FreePoly f = x(2) * x(1) * x(1);
  const SSCombination s = straighten(f);
  EXPECT_EQ(s.terms().size(), 2u);
  EXPECT_EQ(s.coefficient(beg({{1, 2}, {2, 1}})), 1u);
  EXPECT_EQ(s.coefficient(SSTerm({}, {{1, 2, 1, 0}})), 1u);  // -2 = 1 in F_3
  const FreePoly diff = s.to_poly() - f;
  EXPECT_TRUE(in_t3(diff));
  EXPECT_TRUE(eval_battery(diff, 8, 200, 1).all_zero);
}

TEST(Straighten, FixpointOnSSTerms) {
  for (const SSTerm& u : enumerate_ss({1, 2, 3}, 5, 3, false)) {
    const SSCombination s = straighten(to_poly(u, f3()));
    ASSERT_EQ(s.terms().size(), 1u) << format(u);
    EXPECT_EQ(s.coefficient(u), 1u) << format(u);
  }
}

TEST(Straighten, CharacteristicTwoSortsCommutatively) {
  auto f2 = Field::prime(2);
  const FreePoly f = FreePoly::monomial(f2, {3, 1, 2, 1});
  const SSCombination s = straighten(f);
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.coefficient(beg({{1, 2}, {2, 1}, {3, 1}})), 1u);
}

TEST(Straighten, DifferenceLiesInT3) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    FreePoly f(f3());
    for (int t = 0; t < 3; ++t) {
      Word w(std::uniform_int_distribution<unsigned>(1, 4)(rng));
      for (auto& v : w) v = std::uniform_int_distribution<Var>(1, 3)(rng);
      f.add_term(w, std::uniform_int_distribution<Scalar>(1, 2)(rng));
    }
    const FreePoly diff = straighten(f).to_poly() - f;
    EXPECT_TRUE(in_t3(diff)) << format_poly(f);
  }
}

TEST(ReduceHighExponents, Examples) {
  SSCombination a(f3());
  a.add_term(beg({{1, 10}}), 1);
  const SSCombination ra = reduce_high_exponents(a);
  EXPECT_EQ(ra.coefficient(beg({{1, 4}})), 1u);
  EXPECT_EQ(ra.terms().size(), 1u);

  SSCombination b(f3());
  b.add_term(beg({{1, 8}}), 1);
  EXPECT_EQ(reduce_high_exponents(b), b);

  SSCombination c(f3());
  c.add_term(SSTerm({}, {{1, 2, 9, 0}}), 1);
  const SSCombination rc = reduce_high_exponents(c);
  EXPECT_EQ(rc.coefficient(SSTerm({}, {{1, 2, 3, 0}})), 1u);

  // The difference is a multiple of x^9 - x^3, hence an identity.
  const FreePoly diff = rc.to_poly() - c.to_poly();
  EXPECT_TRUE(eval_battery(diff, 8, 300, 2).all_zero);
}

TEST(FactorCanonical, Examples) {
  SSCombination a(f3());
  a.add_term(SSTerm({{1, 5}, {2, 1}}, {{3, 4, 2, 0}}), 1);
  const CanonicalForm ca = factor_canonical(a);
  ASSERT_EQ(ca.components.size(), 1u);
  EXPECT_EQ(ca.components[0].tail, SSTerm({{1, 2}, {2, 1}}, {{3, 4, 2, 0}}));
  EXPECT_TRUE(is_bss(ca.components[0].tail, 3));
  EXPECT_EQ(ca.components[0].coefficient.format(), "x1^3");

  SSCombination b(f3());
  b.add_term(beg({{1, 3}}), 1);
  const CanonicalForm cb = factor_canonical(b);
  ASSERT_EQ(cb.components.size(), 1u);
  EXPECT_TRUE(cb.components[0].tail.is_unit());
  EXPECT_EQ(cb.components[0].coefficient.format(), "x1^3");

  SSCombination c(f3());
  c.add_term(beg({{1, 4}}), 1);
  const CanonicalForm cc = factor_canonical(c);
  EXPECT_EQ(cc.components[0].tail, beg({{1, 1}}));
  EXPECT_EQ(cc.components[0].coefficient.format(), "x1^3");
  EXPECT_EQ(cc.to_poly(f3()), x(1).pow(4));
}

TEST(FactorCanonical, EndDegreeMultipleOfP) {
  // [x1,x2] x1^5: end degree 6 keeps p = 3 in the tail.
  SSCombination a(f3());
  a.add_term(SSTerm({}, {{1, 2, 5, 0}}), 1);
  const CanonicalForm c = factor_canonical(a);
  ASSERT_EQ(c.components.size(), 1u);
  EXPECT_EQ(c.components[0].tail, SSTerm({}, {{1, 2, 2, 0}}));
  EXPECT_EQ(c.components[0].coefficient.format(), "x1^3");
}

TEST(FactorCanonical, ResidualDegreeTooHighThrows) {
  SSCombination a(f3());
  a.add_term(beg({{1, 9}}), 1);
  EXPECT_THROW(factor_canonical(a), PreconditionError);
}

TEST(Canonicalize, FormatAndOrder) {
  EXPECT_EQ(canonicalize(P("x2*x1^2")).format(), "x1^2*x2 + [x1,x2]*x1");
  EXPECT_EQ(canonicalize(P("x1^9 - x1^3")).format(), "0");
  EXPECT_EQ(canonicalize(P("[x1,x2,x3]")).format(), "0");
  EXPECT_EQ(canonicalize(P("x1^4 + 2")).format(), "x1^3*x1 + 2");
  EXPECT_EQ(canonicalize(P("x1^3*x2^3 + x1^3")).format(), "(x1^3*x2^3 + x1^3)");
}

TEST(Canonicalize, SoundOnRandomPolynomials) {
  Rng rng(9);
  for (int i = 0; i < 60; ++i) {
    FreePoly f(f3());
    for (int t = 0; t < 4; ++t) {
      Word w(std::uniform_int_distribution<unsigned>(0, 7)(rng));
      for (auto& v : w) v = std::uniform_int_distribution<Var>(1, 3)(rng);
      f.add_term(w, std::uniform_int_distribution<Scalar>(1, 2)(rng));
    }
    const CanonicalForm c = canonicalize(f);
    EXPECT_TRUE(eval_battery(c.to_poly(f3()) - f, 8, 100, i).all_zero) << format_poly(f);
    EXPECT_EQ(canonicalize(c.to_poly(f3())), c);
    for (std::size_t k = 0; k + 1 < c.components.size(); ++k) {
      EXPECT_TRUE(siderov_compare(c.components[k].tail, c.components[k + 1].tail) > 0);
    }
  }
}

TEST(PPolynomial, Recognition) {
  EXPECT_TRUE(is_p_polynomial(P("x1^3*x2^6")));
  EXPECT_FALSE(is_p_polynomial(P("x1^3*x2")));
  EXPECT_TRUE(is_p_polynomial(FreePoly::scalar(Field::prime(7), 5)));
  EXPECT_FALSE(is_p_polynomial(P("x1^9")));
  EXPECT_FALSE(is_p_polynomial(P("x2^3*x1^3")));
}

TEST(RewriteRules, NonLiteralRulesAreCertified) {
  for (const auto& rule : rewrite_rules(f3())) {
    if (rule.literal) {
      EXPECT_TRUE(rule.relation.is_zero()) << rule.name;
    } else {
      EXPECT_TRUE(in_t3(rule.relation)) << rule.name;
    }
  }
}

TEST(RewriteRules, R4FamilyIsPresent) {
  std::size_t r4 = 0;
  for (const auto& rule : rewrite_rules(f3())) r4 += rule.family == "R4";
  EXPECT_GE(r4, 5u);
}
