#include <gtest/gtest.h>

#include "grasspi/error.hpp"
#include "grasspi/siderov.hpp"

using namespace grasspi;

namespace {

FieldPtr f3() { return Field::prime(3); }
FreePoly x(Var i) { return FreePoly::variable(f3(), i); }

SSTerm beg(std::vector<BegFactor> b) { return SSTerm(std::move(b), {}); }

}  // namespace

TEST(SSTerm, ToPoly) {
  EXPECT_EQ(to_poly(beg({{1, 2}}), f3()), x(1) * x(1));
  const SSTerm c({}, {{1, 2, 1, 0}});
  EXPECT_EQ(to_poly(c, f3()), (x(1) * x(2) - x(2) * x(1)) * x(1));
  const SSTerm d({{5, 1}}, {{1, 2, 0, 0}, {3, 4, 0, 0}});
  const FreePoly dp = to_poly(d, f3());
  EXPECT_EQ(dp, x(5) * commutator(x(1), x(2)) * commutator(x(3), x(4)));
  EXPECT_EQ(dp.size(), 4u);
  EXPECT_EQ(to_poly(SSTerm::unit(), f3()), FreePoly::scalar(f3(), 1));
}

TEST(SSTerm, Accessors) {
  const SSTerm a = beg({{1, 2}});
  EXPECT_EQ(a.lbeg(), 1u);
  EXPECT_EQ(a.lend(), 0u);
  EXPECT_EQ(a.degree(), 2u);

  const SSTerm b({}, {{1, 2, 1, 0}});
  EXPECT_EQ(b.lend(), 1u);
  EXPECT_EQ(b.degree_in(1), 2u);
  EXPECT_EQ(b.degree(), 3u);
  EXPECT_TRUE(b.in_end(2));
  EXPECT_FALSE(b.in_beg(2));

  const SSTerm c({{5, 1}}, {{1, 2, 0, 0}, {3, 4, 0, 0}});
  EXPECT_EQ(c.lbeg(), 1u);
  EXPECT_EQ(c.lend(), 2u);
  EXPECT_EQ(c.degree(), 5u);
  EXPECT_EQ(c.multidegree(), (std::map<Var, unsigned>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}));
}

TEST(SSTerm, MalformedTermsThrow) {
  EXPECT_THROW(beg({{2, 1}, {1, 1}}), PreconditionError);
  EXPECT_THROW(beg({{1, 0}}), PreconditionError);
  EXPECT_THROW(SSTerm({}, {{2, 1, 0, 0}}), PreconditionError);
  EXPECT_THROW(SSTerm({{1, 1}}, {{1, 2, 0, 0}}), PreconditionError);
  EXPECT_THROW(SSTerm({}, {{1, 3, 0, 0}, {2, 4, 0, 0}}), PreconditionError);
}

TEST(Siderov, Compare) {
  EXPECT_TRUE(siderov_compare(beg({{1, 2}}), beg({{1, 1}})) > 0);
  EXPECT_TRUE(siderov_compare(beg({{1, 1}, {2, 1}}), SSTerm({}, {{1, 2, 0, 0}})) > 0);
  const SSTerm u({{2, 1}, {4, 1}}, {{1, 3, 0, 0}});
  const SSTerm v({{1, 1}, {4, 1}}, {{2, 3, 0, 0}});
  EXPECT_TRUE(siderov_compare(u, v) > 0);
  EXPECT_TRUE(siderov_compare(v, u) < 0);
  EXPECT_TRUE(siderov_compare(u, u) == 0);
}

TEST(Siderov, TotalOrderOnEnumeration) {
  const auto terms = enumerate_ss({1, 2, 3}, 4, 3, false);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    EXPECT_TRUE(siderov_compare(terms[i], terms[i + 1]) > 0) << format(terms[i]) << " vs " << format(terms[i + 1]);
  }
  // Antisymmetry and transitivity on a sample of triples.
  for (std::size_t i = 0; i < terms.size(); i += 7) {
    for (std::size_t j = 0; j < terms.size(); j += 5) {
      EXPECT_TRUE(siderov_compare(terms[i], terms[j]) == (0 <=> siderov_compare(terms[j], terms[i])));
      for (std::size_t k = 0; k < terms.size(); k += 11) {
        if (siderov_compare(terms[i], terms[j]) > 0 && siderov_compare(terms[j], terms[k]) > 0) {
          EXPECT_TRUE(siderov_compare(terms[i], terms[k]) > 0);
        }
      }
    }
  }
}

TEST(Siderov, BssMembership) {
  EXPECT_TRUE(is_bss(SSTerm({{1, 2}}, {{2, 3, 2, 0}}), 3));
  EXPECT_FALSE(is_bss(beg({{1, 3}}), 3));
  EXPECT_FALSE(is_bss(SSTerm({}, {{1, 2, 3, 0}}), 3));
}

TEST(Siderov, Enumeration) {
  const auto one = enumerate_ss({1}, 2, 3, false);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], beg({{1, 2}}));
  EXPECT_EQ(one[1], beg({{1, 1}}));

  const auto two = enumerate_ss({1, 2}, 2, 3, false);
  std::size_t ends = 0;
  for (const auto& u : two) {
    if (u.lend() > 0) {
      ++ends;
      EXPECT_EQ(u, SSTerm({}, {{1, 2, 0, 0}}));
    }
  }
  EXPECT_EQ(ends, 1u);
  EXPECT_TRUE(enumerate_ss({}, 5, 3, false).empty());
  EXPECT_THROW(enumerate_ss({1, 2, 3, 4}, 12, 3, false, 100), BoundError);
}

TEST(Siderov, EnumerationMatchesStructureCount) {
  // Over {1,2} with degree <= 3: beginnings x1^a x2^b (a+b in 1..3) give 9
  // terms; ends [x1,x2] x1^c x2^d with c+d <= 1 give 3.
  EXPECT_EQ(enumerate_ss({1, 2}, 3, 5, false).size(), 12u);
}

TEST(Siderov, Format) {
  EXPECT_EQ(format(SSTerm({{1, 2}, {4, 1}}, {{2, 3, 0, 1}})), "x1^2*x4*[x2,x3]*x3");
  EXPECT_EQ(format(SSTerm::unit()), "1");
}
