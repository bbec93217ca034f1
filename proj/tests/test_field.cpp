#include <gtest/gtest.h>

#include "grasspi/error.hpp"
#include "grasspi/field.hpp"

using namespace grasspi;

TEST(PrimeField, AddAndInvert) {
  auto f3 = Field::prime(3);
  EXPECT_EQ(f3->add(2, 2), 1u);
  EXPECT_EQ(f3->inv(2), 2u);
  EXPECT_EQ(f3->neg(1), 2u);
  EXPECT_EQ(f3->from_int(-4), 2u);
}

TEST(PrimeField, InverseOfZeroThrows) {
  auto f5 = Field::prime(5);
  EXPECT_THROW(f5->inv(0), DomainError);
  EXPECT_THROW(FieldElem(f5, 0).inv(), DomainError);
}

TEST(ExtensionField, F4RootSquaresToRootPlusOne) {
  auto f4 = Field::of_order(4);
  EXPECT_EQ(f4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const Scalar t = f4->root();
  EXPECT_EQ(f4->mul(t, t), f4->add(t, 1));
  EXPECT_EQ(f4->format(f4->mul(t, t)), "1+t");
}

TEST(ExtensionField, BuiltinModuliAreIrreducible) {
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u, 49u}) {
    auto f = Field::of_order(q);
    EXPECT_TRUE(is_irreducible(f->characteristic(), f->modulus())) << q;
  }
}

TEST(ExtensionField, UntabulatedOrderNeedsModulus) {
  EXPECT_THROW(Field::of_order(6), Error);
  EXPECT_THROW(Field::of_order(81), ConfigError);
  auto f81 = Field::with_modulus(3, {2, 0, 0, 2, 1});
  EXPECT_EQ(f81->order(), 81u);
  EXPECT_THROW(Field::with_modulus(3, {2, 0, 1}), ConfigError);  // x^2 - 1
}

// Field axioms over every small field, exhaustively.
class FieldAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldAxioms, Exhaustive) {
  auto f = Field::of_order(GetParam());
  const Scalar q = f->order();
  for (Scalar a = 0; a < q; ++a) {
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    EXPECT_EQ(f->pow(a, q), a);
    for (Scalar b = 0; b < q; ++b) {
      EXPECT_EQ(f->add(a, b), f->add(b, a));
      EXPECT_EQ(f->mul(a, b), f->mul(b, a));
      EXPECT_EQ(f->frobenius(f->add(a, b)), f->add(f->frobenius(a), f->frobenius(b)));
      for (Scalar c = 0; c < q; c += 3) {
        EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FieldAxioms, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u));

TEST(ExtensionField, FrobeniusIsBijective) {
  auto f = Field::of_order(27);
  std::vector<bool> hit(27, false);
  for (Scalar a = 0; a < 27; ++a) hit[f->frobenius(a)] = true;
  EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}
