#include <gtest/gtest.h>

#include "grasspi/error.hpp"
#include "grasspi/oracle.hpp"
#include "grasspi/text.hpp"

using namespace grasspi;

namespace {

FieldPtr f3() { return Field::prime(3); }
FreePoly x(Var i) { return FreePoly::variable(f3(), i); }
FreePoly P(const char* s, const FieldPtr& f = f3()) { return parse_poly(s, f); }

std::size_t error_position(const char* s, const FieldPtr& f = f3()) {
  try {
    parse_poly(s, f);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(P("x1^9 - x1^3"), x(1).pow(9) - x(1).pow(3));
  std::vector<FreePoly> xs{x(1), x(2), x(3)};
  EXPECT_EQ(P("[x1,x2,x3]"), left_normed(xs));
  EXPECT_EQ(P("2*x1*[x2,x3]*x2^2"), (x(1) * commutator(x(2), x(3)) * x(2).pow(2)).scaled(2));
  EXPECT_EQ(P(" x1 *  x2 "), x(1) * x(2));
  EXPECT_EQ(P("-x1 + 4"), x(1).scaled(2) + FreePoly::scalar(f3(), 1));
  EXPECT_EQ(P("(x1 + x2)^2"), (x(1) + x(2)).pow(2));
  EXPECT_EQ(P("[x1^2 + x3, x2]"), commutator(x(1).pow(2) + x(3), x(2)));
  EXPECT_EQ(P("3*x1"), FreePoly(f3()));
}

TEST(Parse, ExtensionScalars) {
  auto f9 = Field::of_order(9);
  const FreePoly f = P("(1+2*t)*x1 + t^2", f9);
  const Scalar t = f9->root();
  EXPECT_EQ(f.coefficient({1}), f9->add(1, f9->mul(2, t)));
  EXPECT_EQ(f.coefficient({}), f9->mul(t, t));
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_position("x1 +"), 4u);
  EXPECT_EQ(error_position("x0"), 1u);
  EXPECT_EQ(error_position("x1^0"), 3u);
  EXPECT_EQ(error_position("x1 x2"), 3u);
  EXPECT_NE(error_position("[x1]"), std::string::npos);
  EXPECT_NE(error_position("(x1"), std::string::npos);
  EXPECT_NE(error_position("y1"), std::string::npos);
  EXPECT_NE(error_position("t*x1"), std::string::npos);
  EXPECT_EQ(error_position("t*x1", Field::of_order(4)), std::string::npos);
}

TEST(Format, Examples) {
  EXPECT_EQ(format_poly(P("x1^9 - x1^3")), "x1^9 + 2*x1^3");
  EXPECT_EQ(format_poly(FreePoly(f3())), "0");
  EXPECT_EQ(format_poly(P("x2*x1*x1 + 2")), "x2*x1^2 + 2");
}

TEST(Format, RoundTrips) {
  Rng rng(17);
  for (unsigned q : {3u, 4u, 9u}) {
    auto f = Field::of_order(q);
    for (int i = 0; i < 200; ++i) {
      FreePoly g(f);
      for (int t = 0; t < 4; ++t) {
        Word w(std::uniform_int_distribution<unsigned>(0, 5)(rng));
        for (auto& v : w) v = std::uniform_int_distribution<Var>(1, 4)(rng);
        g.add_term(w, std::uniform_int_distribution<Scalar>(1, q - 1)(rng));
      }
      EXPECT_EQ(parse_poly(format_poly(g), f), g) << format_poly(g);
    }
  }
}
