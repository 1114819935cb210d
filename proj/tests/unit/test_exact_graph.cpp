#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eulerperc/exact_graph.hpp"
#include "eulerperc/graph.hpp"
#include "eulerperc/polynomial.hpp"

using namespace eulerperc;

namespace {

// Brute force over all 2^|E| subsets.
IntPolynomial brute_event_poly(const FiniteGraph& g, const EventSpec& ev) {
  IntPolynomial sum;
  const int m = g.num_edges();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    EdgeConfig cfg(static_cast<std::size_t>(m));
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int e = 0; e < m; ++e) {
      if (!((mask >> e) & 1U)) continue;
      cfg.set(static_cast<std::size_t>(e));
      ++deg[static_cast<std::size_t>(g.edge(e).first)];
      ++deg[static_cast<std::size_t>(g.edge(e).second)];
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d % 2 != 0; })) continue;
    if (!ev.holds(cfg)) continue;
    sum += IntPolynomial::monomial(1, cfg.count());
  }
  return sum;
}

FiniteGraph graph_from(const std::string& text) {
  std::istringstream in(text);
  return FiniteGraph::parse(in);
}

}  // namespace

TEST(FigureGraph, Shape) {
  const FiniteGraph g = build_figure_graph();
  EXPECT_EQ(g.num_vertices(), 8);
  EXPECT_EQ(g.num_edges(), 10);
  EXPECT_EQ(g.connected_components(), 1);
  for (int d : g.degrees()) EXPECT_EQ(d % 2, 0);
  EXPECT_EQ(g.find_edge("E0", "F0"), figure_indicator_edge(0));
  EXPECT_EQ(g.find_edge("E2", "F2"), figure_indicator_edge(2));
}

TEST(EvenBasis, DimensionAndSpan) {
  const FiniteGraph g = build_figure_graph();
  const auto basis = even_subgraph_basis(g);
  EXPECT_EQ(basis.size(), 3U);
  std::set<std::string> visited;
  for_each_even_subgraph(g, [&](const EdgeConfig& cfg) { visited.insert(cfg.to_hex()); });
  EXPECT_EQ(visited.size(), 8U);
  EXPECT_EQ(brute_event_poly(g, EventSpec::always()).evaluate(Rational(1)), 8);

  const FiniteGraph tree = graph_from("a b\nb c\nb d\n");
  EXPECT_TRUE(even_subgraph_basis(tree).empty());
  EXPECT_EQ(partition_poly(tree), IntPolynomial({1}));
  const FiniteGraph tri = graph_from("a b\nb c\nc a\n");
  EXPECT_EQ(partition_poly(tri), IntPolynomial({1, 0, 0, 1}));
}

TEST(EventPoly, FigureValues) {
  const FiniteGraph g = build_figure_graph();
  const IntPolynomial z = IntPolynomial::parse("1 + 3*q^4 + 3*q^6 + q^10");
  EXPECT_EQ(partition_poly(g), z);
  EXPECT_EQ(partition_poly(g), brute_event_poly(g, EventSpec::always()));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(event_poly(g, figure_event(i)), IntPolynomial::parse("q^4 + q^10"));
    EXPECT_EQ(event_poly(g, figure_event(i)), brute_event_poly(g, figure_event(i)));
  }
  const auto c12 = figure_event(1) & figure_event(2);
  EXPECT_EQ(event_poly(g, c12), IntPolynomial::monomial(1, 10));
  // On even subgraphs C1 and C2 force X3 = 1, so C1 & C2 = C1 & C2 & C3.
  EXPECT_EQ(event_poly(g, c12 & figure_event(3)), event_poly(g, c12));
  EXPECT_EQ(covariance_numerator(g, figure_event(1), figure_event(2)),
            IntPolynomial::parse("-q^8 + q^10 + q^14 + 3*q^16"));
}

TEST(EventPoly, MatchesBruteForceOnRandomEvents) {
  const FiniteGraph g = build_figure_graph();
  std::uint32_t state = 12345;
  for (int trial = 0; trial < 100; ++trial) {
    EventSpec ev;
    for (int e = 0; e < g.num_edges(); ++e) {
      state = state * 1103515245U + 12345U;
      const unsigned r = (state >> 16) % 5;
      if (r == 0) ev.open.push_back(e);
      if (r == 1) ev.closed.push_back(e);
    }
    EXPECT_EQ(event_poly(g, ev), brute_event_poly(g, ev));
  }
}

TEST(EventSpec, Basics) {
  EventSpec a{"a", {0, 1}, {}};
  EventSpec b{"b", {}, {1}};
  EXPECT_FALSE(a.empty());
  EXPECT_TRUE((a & b).empty());
  EdgeConfig cfg(3);
  cfg.set(0);
  cfg.set(1);
  EXPECT_TRUE(a.holds(cfg));
  EXPECT_FALSE(b.holds(cfg));
  EXPECT_TRUE(EventSpec::always().holds(cfg));
}

TEST(Covariance, NegativeBelowRootPositiveAbove) {
  const FiniteGraph g = build_figure_graph();
  const auto num = covariance_numerator(g, figure_event(1), figure_event(2));
  // Numerator / q^8 = -1 + q^2 + q^6 + 3 q^8 has a single positive root.
  EXPECT_EQ(count_positive_roots(num), 1U);
  const auto [lo, hi] = bisect_root(num, Rational(1, 2), Rational(1), 40);
  const double root = to_double(lo);
  EXPECT_NEAR(root, to_double(hi), 1e-10);
  EXPECT_GT(root, 0.74);
  EXPECT_LT(root, 0.75);
  for (int k = 1; k <= 50; ++k) {
    const Rational p(42 * k, 5000);
    EXPECT_LT(sign_at(num, p / (1 - p)), 0) << k;
  }
  EXPECT_GT(sign_at(num, Rational(1)), 0);
}

// Summing the weight of each even subgraph over all its edges gives q Z'(q).
TEST(PartitionPoly, EdgeCountIdentity) {
  const FiniteGraph g = build_figure_graph();
  const auto z = partition_poly(g);
  IntPolynomial edge_sum;
  for (int e = 0; e < g.num_edges(); ++e) edge_sum += event_poly(g, EventSpec{"e", {e}, {}});
  for (const Rational& q : {Rational(1, 3), Rational(1), Rational(3)}) {
    EXPECT_EQ(edge_sum.evaluate(q), q * derivative(z).evaluate(q));
  }
}

TEST(ParseEvent, Terms) {
  const FiniteGraph g = build_figure_graph();
  EXPECT_EQ(event_poly(g, parse_event(g, "C1")), event_poly(g, figure_event(1)));
  EXPECT_EQ(event_poly(g, parse_event(g, "C1&C2")), IntPolynomial::monomial(1, 10));
  EXPECT_EQ(event_poly(g, parse_event(g, "true")), partition_poly(g));
  EXPECT_EQ(event_poly(g, parse_event(g, "open:E0-F0&closed:E1-F1")), brute_event_poly(g, EventSpec{"x", {0}, {2}}));
  EXPECT_THROW(parse_event(g, "C4"), std::invalid_argument);
  EXPECT_THROW(parse_event(g, "open:E1-E2"), std::invalid_argument);
  EXPECT_THROW(parse_event(g, "open:Z-F0"), std::invalid_argument);
  EXPECT_THROW(parse_event(g, "bogus"), std::invalid_argument);
}

TEST(EventProbability, Values) {
  const FiniteGraph g = build_figure_graph();
  // p = 1/2 gives q = 1: C1 holds on 2 of 8 even subgraphs.
  EXPECT_EQ(event_probability(g, figure_event(1), Rational(1, 2)), Rational(1, 4));
  EXPECT_EQ(event_probability(g, EventSpec::always(), Rational(1, 3)), 1);
}
