#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "eulerperc/contour.hpp"
#include "eulerperc/fk.hpp"
#include "eulerperc/ising.hpp"
#include "eulerperc/lattice.hpp"
#include "eulerperc/rng.hpp"

using namespace eulerperc;

namespace {

FiniteGraph cycle(int n) {
  FiniteGraph g(n);
  for (int k = 0; k < n; ++k) g.add_edge(k, (k + 1) % n);
  return g;
}

std::uint32_t mask_of(const EdgeConfig& cfg) {
  std::uint32_t m = 0;
  for (std::size_t e = 0; e < cfg.size(); ++e)
    if (cfg.test(e)) m |= 1U << e;
  return m;
}

double tv(const std::vector<double>& exact, const std::map<std::uint32_t, double>& counts, double n) {
  double d = 0.0;
  for (std::size_t k = 0; k < exact.size(); ++k) {
    const auto it = counts.find(static_cast<std::uint32_t>(k));
    d += std::fabs(exact[k] - (it == counts.end() ? 0.0 : it->second / n));
  }
  return d / 2;
}

}  // namespace

TEST(FkWeight, Examples) {
  const FiniteGraph g = cycle(4);
  FKParams params{0.3, 2.0, FKBoundary::kFree, {}};
  const EdgeConfig empty(4);
  EXPECT_DOUBLE_EQ(fk_weight(g, empty, params), 16.0);
  EXPECT_EQ(fk_clusters(g, empty, params), 4);
  const EdgeConfig full = empty.complemented();
  const double r = 0.3 / 0.7;
  EXPECT_NEAR(fk_weight(g, full, params), 2 * std::pow(r, 4), 1e-15);
  EXPECT_EQ(fk_weight_exact(g, full, Rational(3, 10), 2, FKBoundary::kFree), 2 * Rational(81, 2401));

  params.q = 1.0;
  EdgeConfig one(4);
  one.set(1);
  EXPECT_NEAR(fk_weight(g, one, params) / fk_weight(g, empty, params), r, 1e-15);

  FKParams wired{0.3, 2.0, FKBoundary::kWired, {0, 2}};
  EXPECT_EQ(fk_clusters(g, empty, wired), 3);
  EXPECT_THROW(fk_weight(g, empty, FKParams{1.0, 2.0, FKBoundary::kFree, {}}), std::invalid_argument);
}

TEST(FkTable, NormalizedAndQ1IsBernoulli) {
  const FiniteGraph g = cycle(4);
  const auto t = exact_fk_table(g, Rational(1, 3), 1, FKBoundary::kFree);
  Rational sum = 0;
  for (std::size_t m = 0; m < t.size(); ++m) {
    sum += t[m];
    const int open = std::popcount(static_cast<unsigned>(m));
    Rational expect = 1;
    for (int k = 0; k < 4; ++k) expect *= k < open ? Rational(1, 3) : Rational(2, 3);
    EXPECT_EQ(t[m], expect);
  }
  EXPECT_EQ(sum, 1);
}

TEST(FOfBeta, Values) {
  EXPECT_EQ(f_of_beta(0.0), 0.0);
  EXPECT_NEAR(f_of_beta(kCriticalBeta), std::sqrt(2.0) / (1 + std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(f_of_beta(50.0), 1.0, 1e-15);
  EXPECT_THROW(f_of_beta(-0.1), std::invalid_argument);
}

TEST(DualParams, Values) {
  EXPECT_NEAR(dual_params(0.5), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(dual_params(Rational(1, 2)), Rational(2, 3));
  EXPECT_NEAR(dual_params(kSelfDualFK), kSelfDualFK, 1e-14);
  for (int k = 1; k <= 9; ++k) EXPECT_NEAR(dual_params(dual_params(k / 10.0)), k / 10.0, 1e-14);
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(dual_params(dual_params(Rational(k, 10))), Rational(k, 10));
  EXPECT_NEAR(2 * kCriticalEvenP, kSelfDualFK, 1e-14);
  EXPECT_NEAR(kCriticalEvenP, 1 - 1 / std::sqrt(2.0), 1e-16);
  EXPECT_THROW(dual_params(0.0), std::invalid_argument);
}

TEST(DualConfig, ComplementCommutes) {
  const auto g = BoxGeometry::build(1);
  for (std::uint32_t m = 0; m < (1U << g.num_edges()); ++m) {
    EdgeConfig cfg(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) cfg.set(static_cast<std::size_t>(e), ((m >> e) & 1U) != 0);
    ASSERT_EQ(dual_config(dual_config(cfg)), cfg);
    ASSERT_EQ(dual_config(cfg.complemented()), dual_config(cfg).complemented());
  }
  EXPECT_TRUE(dual_config(EdgeConfig(12).complemented()).none());
}

TEST(Duality, WiredDualOfFreeTableOnSmallBox) {
  EXPECT_EQ(duality_discrepancy(BoxGeometry::build(1), Rational(1, 3)), 0.0);
  EXPECT_EQ(duality_discrepancy(BoxGeometry::build(1), Rational(3, 5)), 0.0);
  const auto g = BoxGeometry::build(1);
  EXPECT_EQ(box_dual_graph(g).num_vertices(), 5);
  EXPECT_EQ(box_dual_graph(g).num_edges(), 12);
}

TEST(EdwardsSokal, Extremes) {
  const auto g = BoxGeometry::build(2);
  const SpinGraph graph = SpinGraph::dual_box(g);
  Rng rng(70);
  SpinConfig s(static_cast<std::size_t>(g.num_dual_sites()));
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = rng.coin() ? 1 : -1;
  EXPECT_TRUE(edwards_sokal(graph, s, 0.0, rng).none());
  EXPECT_EQ(edwards_sokal(graph, s, 1.0, rng), contours(graph, s).complemented());
}

TEST(EdwardsSokal, CompositeLawIsFk) {
  EXPECT_LT(edwards_sokal_discrepancy(cycle(4), {}, 0.4), 1e-12);
  const std::vector<int> frozen{0};
  EXPECT_LT(edwards_sokal_discrepancy(cycle(4), frozen, 0.7), 1e-12);
  const auto g = BoxGeometry::build(1);
  const FiniteGraph dual = dual_box_graph(g);
  std::vector<int> ring;
  for (int k = 0; k < g.num_dual_sites(); ++k)
    if (g.is_ring(g.dual_site_at(k))) ring.push_back(k);
  EXPECT_LT(edwards_sokal_discrepancy(dual, ring, kCriticalBeta), 1e-10);
}

TEST(EdwardsSokal, SampledCompositeMatchesExactFk) {
  const FiniteGraph g = cycle(4);
  const SpinGraph graph = SpinGraph::from_graph(g);
  const double beta = 0.5;
  const SpinConfig outside(4, 1);
  const std::vector<int> all{0, 1, 2, 3};
  const auto law = exact_local_distribution(graph, outside, all, beta);
  std::vector<double> cdf(law.probabilities.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < cdf.size(); ++k) cdf[k] = acc += law.probabilities[k];
  Rng rng(71);
  std::map<std::uint32_t, double> counts;
  const int n = 200000;
  for (int t = 0; t < n; ++t) {
    const double u = rng.uniform();
    std::size_t k = 0;
    while (k + 1 < cdf.size() && cdf[k] <= u) ++k;
    counts[mask_of(edwards_sokal(graph, law.configuration(outside, k), f_of_beta(beta), rng))] += 1;
  }
  const auto exact = exact_fk_table(g, FKParams{f_of_beta(beta), 2.0, FKBoundary::kFree, {}});
  EXPECT_LT(tv(exact, counts, n), 0.01);
}

TEST(FkGlauber, QOneIsIndependent) {
  const FiniteGraph g = cycle(5);
  EdgeConfig cfg(5);
  Rng rng(72);
  const FKParams params{0.3, 1.0, FKBoundary::kFree, {}};
  double open = 0.0;
  const int n = 40000;
  for (int t = 0; t < n; ++t) {
    fk_glauber_sweep(g, cfg, params, rng);
    open += static_cast<double>(cfg.count());
  }
  EXPECT_NEAR(open / (5.0 * n), 0.3, 0.005);
}

TEST(FkGlauber, UnitSquareLawMatchesExact) {
  const FiniteGraph g = cycle(4);
  const FKParams params{0.4, 2.0, FKBoundary::kFree, {}};
  const auto exact = exact_fk_table(g, params);
  EdgeConfig cfg(4);
  Rng rng(73);
  std::map<std::uint32_t, double> counts;
  const int n = 200000;
  for (int t = 0; t < n; ++t) {
    fk_glauber_sweep(g, cfg, params, rng);
    counts[mask_of(cfg)] += 1;
  }
  EXPECT_LT(tv(exact, counts, n), 0.01);
}

TEST(FkGlauber, ParallelEdgesWired) {
  FiniteGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const FKParams params{0.5, 2.0, FKBoundary::kWired, {0, 2}};
  const auto exact = exact_fk_table(g, params);
  EdgeConfig cfg(3);
  Rng rng(74);
  std::map<std::uint32_t, double> counts;
  const int n = 200000;
  for (int t = 0; t < n; ++t) {
    fk_glauber_sweep(g, cfg, params, rng);
    counts[mask_of(cfg)] += 1;
  }
  EXPECT_LT(tv(exact, counts, n), 0.01);
}

TEST(FkSwendsenWang, LawMatchesExact) {
  for (FKBoundary b : {FKBoundary::kFree, FKBoundary::kWired}) {
    const FiniteGraph g = cycle(4);
    FKParams params{0.6, 2.0, b, {}};
    if (b == FKBoundary::kWired) params.boundary_vertices = {0, 1};
    const auto exact = exact_fk_table(g, params);
    EdgeConfig cfg(4);
    Rng rng(75);
    std::map<std::uint32_t, double> counts;
    const int n = 200000;
    for (int t = 0; t < n; ++t) {
      fk_swendsen_wang_step(g, cfg, params, rng);
      counts[mask_of(cfg)] += 1;
    }
    EXPECT_LT(tv(exact, counts, n), 0.01);
  }
}

TEST(Ordering, ExactOnSmallBox) {
  const auto g = BoxGeometry::build(1);
  for (const Rational& p : {Rational(1, 10), Rational(3, 10), Rational(9, 20)}) {
    EXPECT_LE(exact_ordering_gap(g, p), 0) << p;
  }
  EXPECT_THROW(exact_ordering_gap(g, Rational(1, 2)), std::invalid_argument);
}

TEST(Ordering, MonteCarloSmallBox) {
  const auto g = BoxGeometry::build(6);
  const auto r = compare_mu_to_fk(g, 0.3, 2000, 50, 1, 5);
  ASSERT_EQ(r.entries.size(), 2U);
  EXPECT_FALSE(r.any_violation());
  for (const auto& e : r.entries) EXPECT_LE(e.mu, e.phi + 3 * std::hypot(e.mu_se, e.phi_se)) << e.event;
  EXPECT_THROW(compare_mu_to_fk(g, 0.6, 10, 1, 1, 1), std::invalid_argument);
}
