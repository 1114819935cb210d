#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eulerperc/exact_graph.hpp"
#include "eulerperc/monotone.hpp"
#include "eulerperc/polynomial.hpp"
#include "eulerperc/rng.hpp"

using namespace eulerperc;

namespace {

// Every truth table of n inputs checked for monotonicity by brute force.
std::set<std::uint32_t> brute_monotone(int n) {
  const std::uint32_t size = 1U << n;
  std::set<std::uint32_t> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << size); ++t) {
    bool ok = true;
    for (std::uint32_t x = 0; x < size && ok; ++x)
      for (std::uint32_t y = 0; y < size && ok; ++y) {
        if ((x & y) != x) continue;
        // Inputs x <= y; value at input v sits at bit (~v) & (size - 1).
        const bool fx = ((t >> (~x & (size - 1))) & 1U) != 0;
        const bool fy = ((t >> (~y & (size - 1))) & 1U) != 0;
        if (fx && !fy) ok = false;
      }
    if (ok) out.insert(static_cast<std::uint32_t>(t));
  }
  return out;
}

}  // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_monotone(0).size(), 2U);
  EXPECT_EQ(enumerate_monotone(1).size(), 3U);
  EXPECT_EQ(enumerate_monotone(2).size(), 6U);
  EXPECT_EQ(enumerate_monotone(3).size(), 20U);
  EXPECT_EQ(enumerate_monotone(4).size(), 168U);
  EXPECT_THROW(enumerate_monotone(5), std::invalid_argument);
  EXPECT_THROW(enumerate_monotone(-1), std::invalid_argument);
}

TEST(Enumerate, MatchesBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::uint32_t> got;
    for (const auto& f : enumerate_monotone(n)) {
      EXPECT_TRUE(is_monotone(f));
      got.insert(f.number);
    }
    EXPECT_EQ(got, brute_monotone(n)) << n;
  }
  std::set<std::uint32_t> four;
  for (const auto& f : enumerate_monotone(4)) four.insert(f.number);
  EXPECT_EQ(four.size(), 168U);
}

TEST(IsMonotone, Examples) {
  EXPECT_TRUE(is_monotone({2, 0x1}));   // AND: value 1 only at x = (1, 1), bit 0.
  EXPECT_FALSE(is_monotone({2, 0x8}));  // value 1 only at x = (0, 0).
  const int one_one[2] = {1, 1};
  const int zero_one[2] = {0, 1};
  const MonotoneFunction conj{2, 0x1};
  EXPECT_TRUE(conj(one_one));
  EXPECT_FALSE(conj(zero_one));
}

TEST(IntegralPoly, Examples) {
  EXPECT_EQ(integral_poly({4, 0xFFFFU}), IntPolynomial::parse("1 + 3*q^4 + 3*q^6 + q^10"));
  EXPECT_EQ(integral_poly({4, 0xFFFFU}), partition_poly(build_figure_graph()));
  EXPECT_TRUE(integral_poly({4, 0}).is_zero());
  EXPECT_EQ(integral_poly({4, 0x1}), IntPolynomial::monomial(1, 10));
  EXPECT_EQ(variation_poly({4, 0x1}), IntPolynomial::parse("10*q^9 + 18*q^13 + 12*q^15"));
  EXPECT_TRUE(variation_poly({4, 0xFFFFU}).is_zero());
  EXPECT_THROW(integral_poly({3, 0x1}), std::invalid_argument);
}

// P_F is the even-subgraph sum of F(X0, X1, X2, X3) on the figure graph.
TEST(IntegralPoly, MatchesFigureGraphSums) {
  const FiniteGraph g = build_figure_graph();
  for (const auto& f : enumerate_monotone(4)) {
    IntPolynomial sum;
    for_each_even_subgraph(g, [&](const EdgeConfig& cfg) {
      int x[4];
      for (int i = 0; i < 4; ++i) x[i] = cfg.test(static_cast<std::size_t>(figure_indicator_edge(i))) ? 1 : 0;
      if (f(x)) sum += IntPolynomial::monomial(1, cfg.count());
    });
    ASSERT_EQ(integral_poly(f), sum) << f.number;
  }
}

TEST(Certify, AllFunctions) {
  const auto r = certify_monotonicity();
  EXPECT_EQ(r.counts_per_arity, (std::vector<std::size_t>{3, 6, 20, 168}));
  EXPECT_EQ(r.functions_checked, 168U);
  EXPECT_EQ(r.distinct_rf.size(), 17U);
  EXPECT_TRUE(r.matches_reference);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(r.certified());
  std::set<std::string> neg;
  for (const auto& [poly, number] : r.negative_coefficient_rf) {
    neg.insert(poly.to_string());
    EXPECT_EQ(variation_poly({4, number}), poly);
  }
  EXPECT_TRUE(neg.count("8*q^3 - 2*q^9 + 6*q^13 + 12*q^15"));
  EXPECT_TRUE(neg.count("12*q^3 - 8*q^9 + 12*q^15"));
  EXPECT_TRUE(neg.count("12*q^3 + 6*q^5 - 2*q^9 + 8*q^15"));
}

// Independent check of the sign of R_F on a rational grid.
TEST(Certify, VariationNonnegativeOnGrid) {
  Rng rng(90);
  const auto all = enumerate_monotone(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& f = all[rng.next_u64() % all.size()];
    const auto rf = variation_poly(f);
    for (int k = 1; k <= 200; ++k) {
      const Rational q(k, 20);
      ASSERT_GE(sign_at(rf, q), 0) << f.number << " at " << q;
    }
  }
}
