#include <gtest/gtest.h>

#include <queue>
#include <stdexcept>

#include "eulerperc/clusters.hpp"
#include "eulerperc/fk.hpp"
#include "eulerperc/lattice.hpp"
#include "eulerperc/rng.hpp"

using namespace eulerperc;

namespace {

std::vector<int> bfs_labels(const BoxGeometry& g, const EdgeConfig& cfg) {
  std::vector<int> label(static_cast<std::size_t>(g.num_sites()), -1);
  int next = 0;
  for (int s = 0; s < g.num_sites(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    label[static_cast<std::size_t>(s)] = next;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e : g.incident_edges(g.site_at(u))) {
        if (!cfg.test(static_cast<std::size_t>(e))) continue;
        const int v = g.edge(e).from == u ? g.edge(e).to : g.edge(e).from;
        if (label[static_cast<std::size_t>(v)] < 0) {
          label[static_cast<std::size_t>(v)] = next;
          q.push(v);
        }
      }
    }
    ++next;
  }
  return label;
}

ScanPoint point(double p, double freq) {
  ScanPoint s;
  s.p = p;
  s.samples = 100;
  s.crossing_freq = freq;
  return s;
}

}  // namespace

TEST(Components, Examples) {
  const auto g = BoxGeometry::build(3);
  const EdgeConfig empty(static_cast<std::size_t>(g.num_edges()));
  auto c = components(g, empty);
  EXPECT_EQ(c.num_clusters(), g.num_sites());
  EXPECT_EQ(c.largest(), 1);
  c = components(g, empty.complemented());
  EXPECT_EQ(c.num_clusters(), 1);
  EXPECT_EQ(c.largest(), g.num_sites());
  EdgeConfig square = empty;
  for (int e : g.face_edges({0, 0})) square.set(static_cast<std::size_t>(e));
  c = components(g, square);
  EXPECT_EQ(c.num_clusters(), g.num_sites() - 3);
  EXPECT_EQ(c.largest(), 4);
  EXPECT_TRUE(connected(g, square, {0, 0}, {1, 1}));
  EXPECT_FALSE(connected(g, square, {0, 0}, {2, 2}));
}

TEST(Components, MatchesBfsOnRandomConfigs) {
  const auto g = BoxGeometry::build(6);
  Rng rng(80);
  for (int trial = 0; trial < 1000; ++trial) {
    const double density = rng.uniform();
    EdgeConfig cfg(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) cfg.set(static_cast<std::size_t>(e), rng.bernoulli(density));
    const auto c = components(g, cfg);
    const auto oracle = bfs_labels(g, cfg);
    // Both labelings number clusters by smallest site index.
    ASSERT_EQ(c.label, oracle);
    int total = 0;
    for (int s : c.sizes) total += s;
    ASSERT_EQ(total, g.num_sites());
  }
}

TEST(Components, ClusterCountMatchesFkCount) {
  const auto g = BoxGeometry::build(3);
  const auto graph = box_graph(g);
  Rng rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    EdgeConfig cfg(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) cfg.set(static_cast<std::size_t>(e), rng.coin());
    EXPECT_EQ(components(g, cfg).num_clusters(), fk_clusters(graph, cfg, FKParams{}));
  }
}

TEST(Crossing, Examples) {
  const auto g = BoxGeometry::build(4);
  const EdgeConfig empty(static_cast<std::size_t>(g.num_edges()));
  EXPECT_FALSE(crossing(g, empty, Axis::kHorizontal));
  EXPECT_TRUE(crossing(g, empty.complemented(), Axis::kHorizontal));
  EXPECT_TRUE(crossing(g, empty.complemented(), Axis::kVertical));
  EXPECT_EQ(central_half_width(4), 2);
  EXPECT_EQ(central_half_width(1), 1);

  // Full-width two-row ladder through rows y = 0 and y = 1.
  EdgeConfig ladder = empty;
  for (int x = -4; x <= 4; ++x) {
    if (x < 4) {
      ladder.set(static_cast<std::size_t>(g.right_edge({x, 0})));
      ladder.set(static_cast<std::size_t>(g.right_edge({x, 1})));
    }
    ladder.set(static_cast<std::size_t>(g.up_edge({x, 0})));
  }
  EXPECT_TRUE(crossing(g, ladder, Axis::kHorizontal));
  EXPECT_FALSE(crossing(g, ladder, Axis::kVertical));
  EXPECT_EQ(crossing_cluster_count(g, ladder, Axis::kHorizontal, 2), 1);
  EXPECT_THROW(crossing(g, ladder, Axis::kHorizontal, 5), std::invalid_argument);
}

TEST(Crossing, UsesOnlySubBoxEdges) {
  const auto g = BoxGeometry::build(4);
  // Path along y = 0 from x = -2 to 2 with a detour outside the sub-box.
  EdgeConfig cfg(static_cast<std::size_t>(g.num_edges()));
  for (int x = -2; x < 0; ++x) cfg.set(static_cast<std::size_t>(g.right_edge({x, 0})));
  for (int x = 1; x < 2; ++x) cfg.set(static_cast<std::size_t>(g.right_edge({x, 0})));
  // 0 -> 1 goes around through y = 3.
  for (int y = 0; y < 3; ++y) {
    cfg.set(static_cast<std::size_t>(g.up_edge({0, y})));
    cfg.set(static_cast<std::size_t>(g.up_edge({1, y})));
  }
  cfg.set(static_cast<std::size_t>(g.right_edge({0, 3})));
  EXPECT_FALSE(crossing(g, cfg, Axis::kHorizontal, 2));
  EXPECT_TRUE(crossing(g, cfg, Axis::kHorizontal, 4) == false);
  cfg.set(static_cast<std::size_t>(g.right_edge({0, 0})));
  EXPECT_TRUE(crossing(g, cfg, Axis::kHorizontal, 2));
  EXPECT_EQ(crossing_cluster_count(g, cfg, Axis::kHorizontal, 2), 1);
}

TEST(LargestClusterFraction, Extremes) {
  const auto g = BoxGeometry::build(3);
  const EdgeConfig empty(static_cast<std::size_t>(g.num_edges()));
  EXPECT_DOUBLE_EQ(largest_cluster_fraction(g, empty), 1.0 / g.num_sites());
  EXPECT_DOUBLE_EQ(largest_cluster_fraction(g, empty.complemented()), 1.0);
}

TEST(Wilson, Interval) {
  const auto [lo, hi] = wilson_interval(50, 100);
  EXPECT_NEAR(lo, 0.4038, 1e-4);
  EXPECT_NEAR(hi, 0.5962, 1e-4);
  const auto [lo0, hi0] = wilson_interval(0, 20);
  EXPECT_EQ(lo0, 0.0);
  EXPECT_GT(hi0, 0.0);
}

TEST(HalfCrossing, InterpolatesMonotoneFit) {
  const std::vector<ScanPoint> curve{point(0.1, 0.0), point(0.2, 0.3), point(0.3, 0.7), point(0.4, 1.0)};
  EXPECT_NEAR(*half_crossing_point(curve), 0.25, 1e-12);
  // A dip is pooled: (0.6 + 0.4) / 2 = 0.5 at both 0.2 and 0.3.
  const std::vector<ScanPoint> dip{point(0.1, 0.1), point(0.2, 0.6), point(0.3, 0.4), point(0.4, 0.9)};
  EXPECT_NEAR(*half_crossing_point(dip), 0.2, 1e-12);
  const std::vector<ScanPoint> low{point(0.1, 0.0), point(0.2, 0.1)};
  EXPECT_FALSE(half_crossing_point(low).has_value());
}

TEST(PseudoIntersection, SignChange) {
  const std::vector<ScanPoint> small{point(0.2, 0.2), point(0.3, 0.5), point(0.4, 0.8)};
  const std::vector<ScanPoint> large{point(0.2, 0.1), point(0.3, 0.5001), point(0.4, 0.9)};
  const auto x = pseudo_intersection(small, large);
  ASSERT_TRUE(x.has_value());
  EXPECT_GT(*x, 0.2);
  EXPECT_LT(*x, 0.3);
  EXPECT_FALSE(pseudo_intersection(small, small).has_value());
}

TEST(ThresholdScan, SortedDeterministicAndThreadIndependent) {
  const std::vector<double> grid{0.35, 0.15};
  const std::vector<int> ls{6, 3};
  ScanOptions opt;
  opt.burnin_sweeps = 20;
  const auto a = threshold_scan(grid, ls, 30, 9, opt);
  opt.threads = 3;
  const auto b = threshold_scan(grid, ls, 30, 9, opt);
  ASSERT_EQ(a.size(), 4U);
  EXPECT_EQ(a[0].half_width, 3);
  EXPECT_EQ(a[0].p, 0.15);
  EXPECT_EQ(a[3].half_width, 6);
  EXPECT_EQ(a[3].p, 0.35);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].crossings, b[k].crossings);
    EXPECT_EQ(a[k].largest_frac_mean, b[k].largest_frac_mean);
    EXPECT_LE(a[k].ci_low, a[k].crossing_freq);
    EXPECT_GE(a[k].ci_high, a[k].crossing_freq);
  }
}

TEST(ThresholdScan, SupercriticalHasLargerClusters) {
  const std::vector<double> grid{0.25, 0.45};
  const std::vector<int> ls{16};
  ScanOptions opt;
  opt.burnin_sweeps = 100;
  const auto r = threshold_scan(grid, ls, 50, 4, opt);
  EXPECT_GT(r[1].largest_frac_mean, r[0].largest_frac_mean);
  EXPECT_GT(r[1].crossing_freq, r[0].crossing_freq);
}
