#include <gtest/gtest.h>

#include "grasspi/decide.hpp"
#include "grasspi/error.hpp"
#include "grasspi/oracle.hpp"
#include "grasspi/text.hpp"

using namespace grasspi;

namespace {

FieldPtr f3() { return Field::prime(3); }
FreePoly P(const char* s) { return parse_poly(s, f3()); }

SpanGenerator t3_ideal() { return {P("[x1,x2,x3]"), Closure::kTIdeal}; }

}  // namespace

TEST(Battery, IdentitiesSurvive) {
  EXPECT_TRUE(eval_battery(P("x1^9 - x1^3"), 6, 1000, 0).all_zero);
  EXPECT_TRUE(eval_battery(P("[x1,x2,x3]"), 6, 1000, 0).all_zero);
}

TEST(Battery, CommutatorCounterexample) {
  const auto r = eval_battery(P("x1*x2 - x2*x1"), 2, 10, 0);
  ASSERT_FALSE(r.all_zero);
  ASSERT_TRUE(r.counterexample && r.value);
  EXPECT_EQ(r.trials_run, 1u);
  EXPECT_EQ(r.counterexample->image(1), GrassmannElem::generator(f3(), 2, 1));
  EXPECT_EQ(r.counterexample->image(2), GrassmannElem::generator(f3(), 2, 2));
  EXPECT_EQ(*r.value, GrassmannElem::basis(f3(), 2, 0b11, 2));
}

TEST(Battery, SeedsAreReproducible) {
  const FreePoly f = P("x1^3*x2 - x1");
  const auto a = eval_battery(f, 6, 50, 42);
  const auto b = eval_battery(f, 6, 50, 42);
  EXPECT_EQ(a.trials_run, b.trials_run);
  ASSERT_TRUE(a.value && b.value);
  EXPECT_EQ(*a.value, *b.value);
}

TEST(Span, CertifiesStraighteningRule) {
  SpanProblem prob{P("[x1,x2]*[x3,x4] + [x1,x3]*[x2,x4]"), {t3_ideal()}};
  const auto r = bounded_span_member(prob);
  ASSERT_TRUE(r.member);
  FreePoly sum(f3());
  for (const auto& [c, inst] : r.certificate) sum += inst.scaled(c);
  EXPECT_EQ(sum, prob.target);
}

TEST(Span, CommutatorIsNotInT3) {
  SpanProblem prob{P("[x1,x2]"), {t3_ideal()}};
  const auto r = bounded_span_member(prob);
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.rank, 0u);
}

TEST(Span, PPowerBeginningInCentralSpace) {
  std::vector<SpanGenerator> gens;
  for (const auto& g : s1_generators(f3(), 1)) gens.push_back({g, Closure::kTSpace});
  gens.push_back(t3_ideal());
  SpanProblem prob{P("x1^3*[x2,x3]"), gens};
  prob.pool_max_degree = 0;
  EXPECT_TRUE(bounded_span_member(prob).member);
}

TEST(Span, InstanceBound) {
  SpanProblem prob{P("x1^3*[x2,x3]*x1"), {t3_ideal()}};
  prob.max_instances = 2;
  EXPECT_THROW(bounded_span_member(prob), BoundError);
}

TEST(FieldIdentity, Examples) {
  EXPECT_TRUE(field_identity_bruteforce(P("x1^3 - x1")).zero);

  auto r = field_identity_bruteforce(P("x1^2 - 1"));
  ASSERT_FALSE(r.zero);
  EXPECT_EQ(r.point, (std::vector<Scalar>{0}));
  EXPECT_EQ(r.value, 2u);

  r = field_identity_bruteforce(P("x1^2*x2 - x2"));
  ASSERT_FALSE(r.zero);
  EXPECT_EQ(r.variables, (std::vector<Var>{1, 2}));
  EXPECT_EQ(r.point, (std::vector<Scalar>{0, 1}));
  EXPECT_EQ(r.value, 2u);
  EXPECT_THROW(field_identity_bruteforce(P("x2*x1")), PreconditionError);
}

TEST(BruteDomPower, Examples) {
  auto f5 = Field::prime(5);
  auto r = brute_dom_power(FieldElem(f5, 3), 2, 2, false);
  EXPECT_EQ(r.nominal, GrassmannElem::basis(f5, 4, 0b1111, 2));
  EXPECT_EQ(r.dom_weight, 4u);

  auto f3f = Field::prime(3);
  r = brute_dom_power(FieldElem(f3f, 1), 0, 2, true);
  EXPECT_EQ(r.nominal, GrassmannElem::basis(f3f, 1, 1, 2));

  r = brute_dom_power(FieldElem(f5, 0), 1, 3, false);
  EXPECT_TRUE(r.nominal.is_zero());
  EXPECT_EQ(r.nominal_weight, 2u);
  EXPECT_EQ(r.dom_weight, 0u);  // (e1e2)^3 = 0, nothing survives
}

TEST(RandomElements, RespectBounds) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_element(f3(), 5, rng);
    EXPECT_EQ(g.bound(), 5u);
    for (const auto& [mask, c] : g.terms()) EXPECT_EQ(mask & ~first_generators(5), 0u);
  }
}
