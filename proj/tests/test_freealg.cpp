#include <gtest/gtest.h>

#include "grasspi/error.hpp"
#include "grasspi/freealg.hpp"
#include "grasspi/oracle.hpp"

using namespace grasspi;

namespace {

FieldPtr f3() { return Field::prime(3); }
FreePoly x(Var i) { return FreePoly::variable(f3(), i); }

}  // namespace

TEST(FreePoly, Products) {
  EXPECT_EQ(x(1) * x(2), FreePoly::monomial(f3(), {1, 2}));
  const FreePoly sq = (x(1) + x(2)).pow(2);
  EXPECT_EQ(sq.size(), 4u);
  for (const Word& w : {Word{1, 1}, Word{1, 2}, Word{2, 1}, Word{2, 2}}) EXPECT_EQ(sq.coefficient(w), 1u);
  EXPECT_TRUE((x(1).scaled(2) + x(1)).is_zero());
  EXPECT_EQ(x(1).pow(0), FreePoly::scalar(f3(), 1));
}

TEST(FreePoly, FieldMismatchThrows) {
  EXPECT_THROW(x(1) + FreePoly::variable(Field::prime(5), 1), ConfigError);
}

TEST(FreePoly, Commutators) {
  EXPECT_EQ(commutator(x(1), x(2)), x(1) * x(2) - x(2) * x(1));
  EXPECT_TRUE(commutator(x(1), x(1)).is_zero());
  std::vector<FreePoly> xs{x(1), x(2), x(3)};
  const FreePoly t = left_normed(xs);
  EXPECT_EQ(t, commutator(commutator(x(1), x(2)), x(3)));
  EXPECT_EQ(t.size(), 4u);  // x1x2x3 - x2x1x3 - x3x1x2 + x3x2x1
  EXPECT_EQ(t.coefficient({1, 2, 3}), 1u);
  EXPECT_EQ(t.coefficient({2, 1, 3}), 2u);
  EXPECT_EQ(t.coefficient({3, 1, 2}), 2u);
  EXPECT_EQ(t.coefficient({3, 2, 1}), 1u);
}

TEST(Evaluate, Examples) {
  auto f = f3();
  GrassmannAssignment s(f, 2);
  s.set(1, GrassmannElem::generator(f, 2, 1));
  s.set(2, GrassmannElem::generator(f, 2, 2));
  EXPECT_EQ(evaluate(commutator(x(1), x(2)), s), GrassmannElem::basis(f, 2, 0b11, 2));

  GrassmannAssignment t(f, 1);
  t.set(1, GrassmannElem::scalar(f, 1, 1) + GrassmannElem::generator(f, 1, 1));
  EXPECT_EQ(evaluate(x(1).pow(2), t), GrassmannElem::scalar(f, 1, 1) + GrassmannElem::basis(f, 1, 1, 2));

  // Unassigned variables go to the default, zero unless set.
  EXPECT_TRUE(evaluate(x(3), t).is_zero());
  t.set_default(GrassmannElem::scalar(f, 1, 2));
  EXPECT_EQ(evaluate(x(3), t), GrassmannElem::scalar(f, 1, 2));
}

TEST(Evaluate, TripleCommutatorVanishesInG4) {
  auto f = f3();
  std::vector<FreePoly> xs{x(1), x(2), x(3)};
  const FreePoly t = left_normed(xs);
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(evaluate(t, random_assignment(f, {1, 2, 3}, 4, rng)).is_zero());
  }
}

TEST(Substitute, Examples) {
  auto f = f3();
  std::map<Var, FreePoly> tau{{1, x(2) + x(3)}};
  EXPECT_EQ(substitute(x(1).pow(2), tau), x(2) * x(2) + x(2) * x(3) + x(3) * x(2) + x(3) * x(3));
  std::map<Var, FreePoly> one{{1, FreePoly::scalar(f, 1)}};
  EXPECT_EQ(substitute(x(1), one), FreePoly::scalar(f, 1));
  std::map<Var, FreePoly> same{{1, x(1)}, {2, x(1)}};
  EXPECT_TRUE(substitute(commutator(x(1), x(2)), same).is_zero());
  // Variables outside tau are kept.
  EXPECT_EQ(substitute(x(1) * x(4), tau), (x(2) + x(3)) * x(4));
}

TEST(Degrees, Bookkeeping) {
  const FreePoly f = x(1) * x(1) * x(2);
  const auto d = degrees(f);
  EXPECT_EQ(d.total_degree, 3u);
  EXPECT_EQ(degree_in(f, 1), 2u);
  EXPECT_TRUE(d.multihomogeneous);
  EXPECT_FALSE(is_essential(x(1) * x(2) + x(1)));
  EXPECT_TRUE(is_essential(x(1) * x(2) + x(2) * x(1)));
  EXPECT_THROW(degrees(FreePoly(f3())), DomainError);
  EXPECT_THROW(is_essential(FreePoly(f3())), DomainError);
}
