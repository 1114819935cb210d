#include "eulerperc/even_measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>

#include "eulerperc/contour.hpp"
#include "eulerperc/gf2.hpp"
#include "eulerperc/graph.hpp"

namespace eulerperc {

namespace {

void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");
}

void check_window(const BoxGeometry& g, std::span<const int> window) {
  if (window.size() > static_cast<std::size_t>(kMaxWindowEdges)) {
    throw std::invalid_argument("window has more than 64 edges");
  }
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.num_edges()), 0);
  for (int e : window) {
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("window edge index out of range");
    if (seen[static_cast<std::size_t>(e)]++ != 0) throw std::invalid_argument("window repeats an edge");
  }
}

}  // namespace

EdgeConfig EvenBoxMeasure::configuration(const BoxGeometry& g, std::size_t index) const {
  EdgeConfig cfg = boundary.size() == 0 ? EdgeConfig(static_cast<std::size_t>(g.num_edges())) : boundary;
  const std::uint64_t pat = patterns.at(index);
  for (std::size_t k = 0; k < window.size(); ++k) cfg.set(static_cast<std::size_t>(window[k]), (pat >> k) & 1U);
  return cfg;
}

double EvenBoxMeasure::probability_of(std::uint64_t pattern) const {
  const auto it = std::lower_bound(patterns.begin(), patterns.end(), pattern);
  if (it == patterns.end() || *it != pattern) return 0.0;
  return probabilities[static_cast<std::size_t>(it - patterns.begin())];
}

PatternLaw EvenBoxMeasure::law() const {
  PatternLaw out;
  for (std::size_t k = 0; k < patterns.size(); ++k) out.emplace(patterns[k], probabilities[k]);
  return out;
}

IntPolynomial EvenBoxMeasure::generating_polynomial() const {
  std::vector<BigInt> c;
  for (auto n : counts_by_open) c.emplace_back(n);
  return IntPolynomial(std::move(c));
}

EvenBoxMeasure exact_even_measure(const BoxGeometry& g, std::span<const int> window, const EdgeConfig& boundary,
                                  double p) {
  check_probability(p);
  check_window(g, window);
  if (boundary.size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("boundary configuration does not match the box");
  }

  const std::size_t n = window.size();
  std::vector<int> position(static_cast<std::size_t>(g.num_edges()), -1);
  for (std::size_t k = 0; k < n; ++k) position[static_cast<std::size_t>(window[k])] = static_cast<int>(k);

  std::vector<BitVector> rows;
  std::vector<std::uint8_t> rhs;
  rows.reserve(static_cast<std::size_t>(g.num_sites()));
  for (int s = 0; s < g.num_sites(); ++s) {
    BitVector row(n);
    std::uint8_t parity = 0;
    for (int e : g.incident_edges(g.site_at(s))) {
      const int k = position[static_cast<std::size_t>(e)];
      if (k >= 0) {
        row.set(static_cast<std::size_t>(k));
      } else if (boundary.test(static_cast<std::size_t>(e))) {
        parity ^= 1U;
      }
    }
    rows.push_back(std::move(row));
    rhs.push_back(parity);
  }
  const auto sol = solve_gf2(std::move(rows), std::move(rhs), n);
  if (!sol) throw UnsatisfiableBoundary("no even configuration agrees with the boundary");
  const std::size_t rank = sol->kernel.size();
  if (rank > static_cast<std::size_t>(kMaxCycleRank)) {
    throw std::invalid_argument("cycle space of the window is too large to enumerate");
  }

  auto to_word = [](const BitVector& v) { return v.size() == 0 ? std::uint64_t{0} : v.words()[0]; };
  std::vector<std::uint64_t> kernel;
  for (const auto& v : sol->kernel) kernel.push_back(to_word(v));

  EvenBoxMeasure m;
  m.window.assign(window.begin(), window.end());
  m.boundary = boundary;
  m.p = p;
  const std::size_t total = std::size_t{1} << rank;
  m.patterns.reserve(total);
  std::uint64_t cur = to_word(sol->particular);
  for (std::size_t i = 0; i < total; ++i) {
    m.patterns.push_back(cur);
    if (i + 1 < total) cur ^= kernel[static_cast<std::size_t>(std::countr_zero(i + 1))];
  }
  std::sort(m.patterns.begin(), m.patterns.end());

  m.counts_by_open.assign(n + 1, 0);
  for (auto pat : m.patterns) ++m.counts_by_open[static_cast<std::size_t>(std::popcount(pat))];
  while (m.counts_by_open.size() > 1 && m.counts_by_open.back() == 0) m.counts_by_open.pop_back();

  const long double q = static_cast<long double>(p) / (1.0L - static_cast<long double>(p));
  std::vector<long double> qpow(n + 1, 1.0L);
  for (std::size_t k = 1; k <= n; ++k) qpow[k] = qpow[k - 1] * q;
  long double z = 0.0L;
  for (std::size_t k = 0; k < m.counts_by_open.size(); ++k) z += static_cast<long double>(m.counts_by_open[k]) * qpow[k];
  m.probabilities.reserve(m.patterns.size());
  for (auto pat : m.patterns) {
    m.probabilities.push_back(static_cast<double>(qpow[static_cast<std::size_t>(std::popcount(pat))] / z));
  }
  return m;
}

std::vector<int> all_edges(const BoxGeometry& g) {
  std::vector<int> out(static_cast<std::size_t>(g.num_edges()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<int> edges_touching(const BoxGeometry& g, std::span<const int> dual_sites) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(g.num_dual_sites()), 0);
  for (int d : dual_sites) {
    if (d < 0 || d >= g.num_dual_sites()) throw std::invalid_argument("dual site index out of range");
    in[static_cast<std::size_t>(d)] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.dual_endpoints(e);
    if (in[static_cast<std::size_t>(a)] || in[static_cast<std::size_t>(b)]) out.push_back(e);
  }
  return out;
}

std::uint64_t window_pattern(const EdgeConfig& cfg, std::span<const int> window) {
  if (window.size() > 64) throw std::invalid_argument("window has more than 64 edges");
  std::uint64_t pat = 0;
  for (std::size_t k = 0; k < window.size(); ++k)
    if (cfg.test(static_cast<std::size_t>(window[k]))) pat |= std::uint64_t{1} << k;
  return pat;
}

PatternLaw marginal(const EvenBoxMeasure& m, std::span<const int> sub_window) {
  std::vector<std::size_t> pos;
  for (int e : sub_window) {
    const auto it = std::find(m.window.begin(), m.window.end(), e);
    if (it == m.window.end()) throw std::invalid_argument("sub-window edge is not in the measure's window");
    pos.push_back(static_cast<std::size_t>(it - m.window.begin()));
  }
  PatternLaw out;
  for (std::size_t i = 0; i < m.patterns.size(); ++i) {
    std::uint64_t sub = 0;
    for (std::size_t k = 0; k < pos.size(); ++k)
      if ((m.patterns[i] >> pos[k]) & 1U) sub |= std::uint64_t{1} << k;
    out[sub] += m.probabilities[i];
  }
  return out;
}

PatternLaw empirical_law(std::span<const EdgeConfig> samples, std::span<const int> window) {
  PatternLaw out;
  if (samples.empty()) return out;
  const double w = 1.0 / static_cast<double>(samples.size());
  for (const auto& s : samples) out[window_pattern(s, window)] += w;
  return out;
}

double total_variation(const PatternLaw& a, const PatternLaw& b) {
  double sum = 0.0;
  for (const auto& [k, v] : a) {
    const auto it = b.find(k);
    sum += std::fabs(v - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : b)
    if (a.find(k) == a.end()) sum += std::fabs(v);
  return 0.5 * sum;
}

EvenPercolationSampler::EvenPercolationSampler(const BoxGeometry& g, double p, std::uint64_t seed, bool cluster_moves)
    : ising_(g, IsingParams{beta_of_p(p), Boundary::all_plus()}, seed, cluster_moves) {}

EdgeConfig EvenPercolationSampler::sample() const { return contours(ising_.geometry(), ising_.current()); }

std::vector<EdgeConfig> sample_mu_p(const BoxGeometry& g, double p, int burnin_sweeps, int n_samples, int thinning,
                                    std::uint64_t seed, bool cluster_moves) {
  check_probability(p);
  if (burnin_sweeps < 1) throw std::invalid_argument("burn-in must be at least one sweep");
  if (thinning < 1) throw std::invalid_argument("thinning must be at least one sweep");
  EvenPercolationSampler sampler(g, p, seed, cluster_moves);
  sampler.sweep(burnin_sweeps);
  std::vector<EdgeConfig> out;
  out.reserve(static_cast<std::size_t>(std::max(n_samples, 0)));
  for (int k = 0; k < n_samples; ++k) {
    if (k > 0) sampler.sweep(thinning);
    out.push_back(sampler.sample());
  }
  return out;
}

WindowDual WindowDual::build(const BoxGeometry& g, std::span<const int> window) {
  std::vector<std::uint8_t> in_window(static_cast<std::size_t>(g.num_edges()), 0);
  for (int e : window) {
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("window edge index out of range");
    in_window[static_cast<std::size_t>(e)] = 1;
  }
  const int L = g.half_width();
  UnionFind uf(static_cast<std::size_t>(g.num_dual_sites()));
  for (int k = 0; k < g.num_dual_sites(); ++k) {
    const DualSite a = g.dual_site_at(k);
    if (a.i < L) {
      const int e = g.up_edge({a.i + 1, a.j});
      if (e < 0 || !in_window[static_cast<std::size_t>(e)]) uf.unite(k, g.dual_index({a.i + 1, a.j}));
    }
    if (a.j < L) {
      const int e = g.right_edge({a.i, a.j + 1});
      if (e < 0 || !in_window[static_cast<std::size_t>(e)]) uf.unite(k, g.dual_index({a.i, a.j + 1}));
    }
  }

  WindowDual wd;
  wd.window.assign(window.begin(), window.end());
  wd.vertex_of_dual_site.assign(static_cast<std::size_t>(g.num_dual_sites()), -1);
  std::vector<int> id_of_root(static_cast<std::size_t>(g.num_dual_sites()), -1);
  int next = 0;
  for (int k = 0; k < g.num_dual_sites(); ++k) {
    const int r = uf.find(k);
    if (id_of_root[static_cast<std::size_t>(r)] < 0) id_of_root[static_cast<std::size_t>(r)] = next++;
    wd.vertex_of_dual_site[static_cast<std::size_t>(k)] = id_of_root[static_cast<std::size_t>(r)];
  }
  wd.ring_vertex = wd.vertex_of_dual_site[static_cast<std::size_t>(g.dual_index({-L - 1, -L - 1}))];

  std::vector<std::pair<int, int>> edges;
  for (int e : window) {
    const auto [a, b] = g.dual_endpoints(e);
    const int va = wd.vertex_of_dual_site[static_cast<std::size_t>(a)];
    const int vb = wd.vertex_of_dual_site[static_cast<std::size_t>(b)];
    if (va == vb) continue;
    edges.emplace_back(va, vb);
    wd.box_edge.push_back(e);
  }
  wd.graph = SpinGraph(next, std::move(edges));
  return wd;
}

EdgeConfig WindowDual::to_box(const BoxGeometry& g, const SpinConfig& spins) const {
  EdgeConfig cfg(static_cast<std::size_t>(g.num_edges()));
  const auto& edges = graph.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (spins[static_cast<std::size_t>(edges[k].first)] != spins[static_cast<std::size_t>(edges[k].second)]) {
      cfg.set(static_cast<std::size_t>(box_edge[k]));
    }
  }
  return cfg;
}

namespace {

GibbsSampler make_window_chain(const WindowDual& wd, double p, std::uint64_t seed, bool cluster_moves) {
  check_probability(p);
  if (p > 0.5) throw std::invalid_argument("window sampler needs p <= 1/2");
  const auto n = static_cast<std::size_t>(wd.graph.num_vertices());
  std::vector<std::uint8_t> frozen(n, 0);
  frozen[static_cast<std::size_t>(wd.ring_vertex)] = 1;
  return GibbsSampler(wd.graph, SpinConfig(n, 1), std::move(frozen), beta_of_p(p), seed, cluster_moves);
}

}  // namespace

WindowEvenSampler::WindowEvenSampler(const BoxGeometry& g, std::span<const int> window, double p, std::uint64_t seed,
                                     bool cluster_moves)
    : geometry_(g), dual_(WindowDual::build(g, window)), chain_(make_window_chain(dual_, p, seed, cluster_moves)) {}

LemmaImageReport verify_lemma_image(const BoxGeometry& g, std::span<const int> interior, const SpinConfig& coloring,
                                    double p) {
  check_probability(p);
  if (coloring.size() != static_cast<std::size_t>(g.num_dual_sites())) {
    throw std::invalid_argument("boundary coloring does not cover the dual box");
  }
  if (interior.size() > static_cast<std::size_t>(kMaxExactSpins)) {
    throw std::invalid_argument("interior too large for exact enumeration");
  }
  std::vector<std::uint8_t> inside(static_cast<std::size_t>(g.num_dual_sites()), 0);
  for (int d : interior) {
    if (d < 0 || d >= g.num_dual_sites()) throw std::invalid_argument("dual site index out of range");
    inside[static_cast<std::size_t>(d)] = 1;
  }

  // The complement must be connected, otherwise colorings on separate
  // outside pieces could be flipped independently.
  {
    std::vector<std::uint8_t> seen(inside.size(), 0);
    int start = -1;
    std::size_t outside_count = 0;
    for (int k = 0; k < g.num_dual_sites(); ++k) {
      if (!inside[static_cast<std::size_t>(k)]) {
        ++outside_count;
        if (start < 0) start = k;
      }
    }
    std::size_t reached = 0;
    if (start >= 0) {
      std::deque<int> queue{start};
      seen[static_cast<std::size_t>(start)] = 1;
      constexpr int kDi[] = {1, -1, 0, 0};
      constexpr int kDj[] = {0, 0, 1, -1};
      while (!queue.empty()) {
        const int k = queue.front();
        queue.pop_front();
        ++reached;
        const DualSite a = g.dual_site_at(k);
        for (int d = 0; d < 4; ++d) {
          const DualSite b{a.i + kDi[d], a.j + kDj[d]};
          if (!g.contains_dual(b)) continue;
          const auto kb = static_cast<std::size_t>(g.dual_index(b));
          if (inside[kb] || seen[kb]) continue;
          seen[kb] = 1;
          queue.push_back(static_cast<int>(kb));
        }
      }
    }
    if (reached != outside_count) throw std::invalid_argument("complement of the interior is not connected");
  }

  const std::vector<int> window = edges_touching(g, interior);
  const EdgeConfig eta = contours(g, coloring);
  const SpinGraph graph = SpinGraph::dual_box(g);
  const SpinTable table = exact_local_distribution(graph, coloring, interior, beta_of_p(p));

  PatternLaw image;
  for (std::size_t m = 0; m < table.probabilities.size(); ++m) {
    const SpinConfig sigma = table.configuration(coloring, m);
    image[window_pattern(contours(g, sigma), window)] += table.probabilities[m];
  }
  const EvenBoxMeasure even = exact_even_measure(g, window, eta, p);
  const PatternLaw target = even.law();

  LemmaImageReport report;
  report.interior_sites = interior.size();
  report.window_edges = window.size();
  report.ising_states = table.probabilities.size();
  report.even_completions = even.patterns.size();
  report.image_patterns = image.size();
  for (const auto& [k, v] : image) {
    const auto it = target.find(k);
    report.max_discrepancy = std::max(report.max_discrepancy, std::fabs(v - (it == target.end() ? 0.0 : it->second)));
  }
  for (const auto& [k, v] : target)
    if (image.find(k) == image.end()) report.max_discrepancy = std::max(report.max_discrepancy, v);
  return report;
}

}  // namespace eulerperc
