#include <gtest/gtest.h>

#include "grasspi/error.hpp"
#include "grasspi/grassmann.hpp"
#include "grasspi/oracle.hpp"

using namespace grasspi;

namespace {

struct G {
  FieldPtr f;
  unsigned m;
  GrassmannElem e(unsigned i) const { return GrassmannElem::generator(f, m, i); }
  GrassmannElem k(Scalar c) const { return GrassmannElem::scalar(f, m, c); }
  GrassmannElem b(std::initializer_list<unsigned> idx, Scalar c = 1) const {
    Mask mask = 0;
    for (unsigned i : idx) mask |= Mask{1} << (i - 1);
    return GrassmannElem::basis(f, m, mask, c);
  }
};

}  // namespace

TEST(Grassmann, GeneratorProducts) {
  G g{Field::prime(3), 4};
  EXPECT_EQ(g.e(1) * g.e(2), g.b({1, 2}));
  EXPECT_EQ(g.e(2) * g.e(1), -g.b({1, 2}));
  EXPECT_EQ(g.e(2) * g.e(1), g.b({1, 2}, 2));
  EXPECT_TRUE((g.e(1) * g.e(1)).is_zero());
  EXPECT_EQ((g.k(1) + g.e(1)) * (g.k(1) + g.e(2)), g.k(1) + g.e(1) + g.e(2) + g.b({1, 2}));
}

TEST(Grassmann, MismatchedConfigurationsThrow) {
  G a{Field::prime(3), 4};
  G b{Field::prime(5), 4};
  G c{Field::prime(3), 5};
  EXPECT_THROW(a.e(1) * b.e(1), ConfigError);
  // Different bounds embed into the larger algebra.
  EXPECT_EQ((a.e(1) + c.e(5)).bound(), 5u);
  EXPECT_THROW(GrassmannElem(a.f, 65), ConfigError);
  EXPECT_THROW(a.e(5), PreconditionError);
}

TEST(Grassmann, MaskSignCountsInversions) {
  // e2 e1 e3 -> one inversion, e3 e2 e1 -> three.
  G g{Field::prime(5), 3};
  EXPECT_EQ(g.e(2) * g.e(1) * g.e(3), g.b({1, 2, 3}, 4));
  EXPECT_EQ(g.e(3) * g.e(2) * g.e(1), g.b({1, 2, 3}, 4));
  EXPECT_EQ(g.e(2) * g.e(3) * g.e(1), g.b({1, 2, 3}));
}

TEST(Grassmann, SplitEvenOdd) {
  G g{Field::prime(5), 3};
  const auto s = split_even_odd(g.k(3) + g.e(1) + g.b({1, 2}));
  EXPECT_EQ(s.scalar.code(), 3u);
  EXPECT_EQ(s.even, g.b({1, 2}));
  EXPECT_EQ(s.odd, g.e(1));

  const auto z = split_even_odd(g.k(0));
  EXPECT_TRUE(z.scalar.is_zero() && z.even.is_zero() && z.odd.is_zero());

  const auto t = split_even_odd(g.b({1, 2, 3}));
  EXPECT_TRUE(t.scalar.is_zero() && t.even.is_zero());
  EXPECT_EQ(t.odd, g.b({1, 2, 3}));
}

TEST(Grassmann, SupportWeightDom) {
  G g{Field::prime(5), 4};
  auto s = support_weight_dom(g.k(2) + g.e(1) + g.b({1, 2}));
  EXPECT_EQ(s.support, Mask{3});
  EXPECT_EQ(s.weight, 2u);
  EXPECT_EQ(s.dom, g.b({1, 2}));

  s = support_weight_dom(g.k(0));
  EXPECT_EQ(s.support, Mask{0});
  EXPECT_EQ(s.weight, 0u);
  EXPECT_TRUE(s.dom.is_zero());

  const auto two = g.b({1, 2}) + g.b({3, 4});
  s = support_weight_dom(two);
  EXPECT_EQ(s.weight, 2u);
  EXPECT_EQ(s.dom, two);
}

TEST(Grassmann, Centrality) {
  G g4{Field::prime(3), 4};
  EXPECT_TRUE(is_central(g4.b({1, 2}), 4));
  G g2{Field::prime(3), 2};
  EXPECT_FALSE(is_central(g2.e(1), 2));
  G g3{Field::prime(3), 3};
  EXPECT_TRUE(is_central(g3.b({1, 2, 3}), 3));
  EXPECT_FALSE(is_central(g3.b({1, 2}) + g3.e(3), 3));
}

TEST(Grassmann, CentralityMatchesOddPartAnnihilation) {
  // Exhaustive over F_2-style 0/1 combinations of basis elements of G(3),
  // using F_3 coefficients 1 only.
  G g{Field::prime(3), 3};
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::vector<GrassmannElem::Term> terms;
    for (Mask mask = 0; mask < 8; ++mask) {
      if (bits >> mask & 1u) terms.push_back({mask, 1});
    }
    const auto x = GrassmannElem::from_terms(g.f, 3, terms);
    const auto odd = split_even_odd(x).odd;
    bool annihilated = true;
    for (unsigned i = 1; i <= 3; ++i) annihilated = annihilated && (odd * g.e(i)).is_zero();
    EXPECT_EQ(is_central(x, 3), odd.is_zero() || annihilated) << x.to_string();
  }
}

TEST(Grassmann, ProjectionToScalars) {
  G g{Field::prime(5), 2};
  EXPECT_EQ(proj_k(g.k(3) + g.b({1, 2})).code(), 3u);
  EXPECT_EQ(proj_k(g.e(1)).code(), 0u);
  EXPECT_EQ(proj_k(g.k(0)).code(), 0u);
}

TEST(Grassmann, Printing) {
  G g{Field::of_order(4), 3};
  EXPECT_EQ(g.k(0).to_string(), "0");
  EXPECT_EQ((g.k(1) + g.b({1, 3})).to_string(), "1 + e1*e3");
  EXPECT_EQ(g.b({2}, g.f->add(g.f->root(), 1)).to_string(), "(1+t)*e2");
}

TEST(DomPower, ClosedFormExamples) {
  auto f5 = Field::prime(5);
  auto f3 = Field::prime(3);
  // (lambda + e1e2 + e3e4)^2 -> 2 e1e2e3e4 for every lambda.
  for (Scalar l = 0; l < 5; ++l) {
    const auto d = dom_power_closed(FieldElem(f5, l), 2, 2, false);
    EXPECT_EQ(d.nominal_weight, 4u);
    EXPECT_EQ(d.part, GrassmannElem::basis(f5, 4, 0b1111, 2));
  }
  auto d = dom_power_closed(FieldElem(f5, 1), 1, 3, false);
  EXPECT_EQ(d.part, GrassmannElem::basis(f5, 2, 0b11, 3));

  d = dom_power_closed(FieldElem(f3, 2), 0, 1, true);
  EXPECT_EQ(d.part, GrassmannElem::generator(f3, 1, 1));
  d = dom_power_closed(FieldElem(f3, 1), 0, 2, true);
  EXPECT_EQ(d.part, GrassmannElem::basis(f3, 1, 1, 2));
  // The printed odd-branch coefficient would give e1 here.
  const auto printed = dom_power_closed(FieldElem(f3, 1), 0, 2, true, DomPowerFormula::kAsPrinted);
  EXPECT_EQ(printed.part, GrassmannElem::generator(f3, 1, 1));
}

TEST(DomPower, VanishingIsReported) {
  auto f5 = Field::prime(5);
  const auto d = dom_power_closed(FieldElem(f5, 0), 1, 3, false);
  EXPECT_TRUE(d.vanishes);
  EXPECT_TRUE(d.part.is_zero());
  EXPECT_EQ(d.nominal_weight, 2u);
  // gamma = p kills the falling factorial.
  EXPECT_TRUE(dom_power_closed(FieldElem(f5, 1), 1, 5, false).vanishes);
}

TEST(DomPower, MatchesExpansionOracle) {
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    auto f = Field::of_order(q);
    for (Scalar l = 0; l < q; ++l) {
      for (unsigned n = 0; n <= 3; ++n) {
        for (bool odd : {false, true}) {
          if (n == 0 && !odd) continue;
          for (unsigned gamma = 1; gamma <= 6; ++gamma) {
            const FieldElem lambda(f, l);
            EXPECT_EQ(dom_power_closed(lambda, n, gamma, odd).part, brute_dom_power(lambda, n, gamma, odd).nominal)
                << "q=" << q << " l=" << l << " n=" << n << " gamma=" << gamma << " odd=" << odd;
          }
        }
      }
    }
  }
}

TEST(DomPower, Preconditions) {
  auto f3 = Field::prime(3);
  EXPECT_THROW(dom_power_closed(FieldElem(f3, 1), 0, 2, false), PreconditionError);
  EXPECT_THROW(dom_power_closed(FieldElem(f3, 1), 1, 0, false), PreconditionError);
}

TEST(GrassmannProperties, CommutatorOfNonzeroPowers) {
  // [g1,g2] g1^a g2^b = 2 c1^a c2^b h1 h2 on random pure-parity components.
  auto f = Field::prime(5);
  Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const auto a = random_element(f, 8, rng);
    const auto b = random_element(f, 8, rng);
    const auto sa = split_even_odd(a);
    const auto sb = split_even_odd(b);
    const auto g1 = sa.even + sa.odd;
    const auto g2 = sb.even + sb.odd;
    const unsigned m1 = rep % 3, m2 = (rep / 3) % 3;
    EXPECT_EQ(commutator(g1, g2) * g1.pow(m1) * g2.pow(m2),
              (sa.even.pow(m1) * sb.even.pow(m2) * sa.odd * sb.odd).scaled(2));
  }
}
