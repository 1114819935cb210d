#include "eulerperc/fk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "eulerperc/clusters.hpp"
#include "eulerperc/contour.hpp"
#include "eulerperc/even_measure.hpp"
#include "eulerperc/exact_graph.hpp"

namespace eulerperc {

namespace {

std::vector<int> wiring(const FKParams& params) {
  return params.boundary == FKBoundary::kWired ? params.boundary_vertices : std::vector<int>{};
}

EdgeConfig mask_config(std::size_t edges, std::uint32_t mask) {
  EdgeConfig cfg(edges);
  for (std::size_t e = 0; e < edges; ++e)
    if ((mask >> e) & 1U) cfg.set(e);
  return cfg;
}

std::uint32_t config_mask(const EdgeConfig& cfg) {
  return cfg.size() == 0 ? 0U : static_cast<std::uint32_t>(cfg.words()[0]);
}

void check_exact_size(const FiniteGraph& g) {
  if (g.num_edges() > kMaxExactFKEdges) throw std::invalid_argument("graph has too many edges for an exact table");
}

}  // namespace

int fk_clusters(const FiniteGraph& g, const EdgeConfig& cfg, const FKParams& params) {
  return g.open_components(cfg, wiring(params));
}

double fk_weight(const FiniteGraph& g, const EdgeConfig& cfg, const FKParams& params) {
  if (!(params.p > 0.0 && params.p < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");
  if (!(params.q > 0.0)) throw std::invalid_argument("q must be positive");
  const double ratio = params.p / (1.0 - params.p);
  return std::pow(ratio, static_cast<double>(cfg.count())) * std::pow(params.q, fk_clusters(g, cfg, params));
}

Rational fk_weight_exact(const FiniteGraph& g, const EdgeConfig& cfg, const Rational& p, int q, FKBoundary boundary,
                         std::span<const int> boundary_vertices) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie strictly between 0 and 1");
  if (q <= 0) throw std::invalid_argument("q must be positive");
  const Rational ratio = p / (1 - p);
  const std::span<const int> wired = boundary == FKBoundary::kWired ? boundary_vertices : std::span<const int>{};
  const int k = g.open_components(cfg, wired);
  Rational w = 1;
  for (std::size_t i = 0; i < cfg.count(); ++i) w *= ratio;
  for (int i = 0; i < k; ++i) w *= q;
  return w;
}

std::vector<Rational> exact_fk_table(const FiniteGraph& g, const Rational& p, int q, FKBoundary boundary,
                                     std::span<const int> boundary_vertices) {
  check_exact_size(g);
  const auto m = static_cast<std::size_t>(g.num_edges());
  std::vector<Rational> table(std::size_t{1} << m);
  Rational z = 0;
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = fk_weight_exact(g, mask_config(m, mask), p, q, boundary, boundary_vertices);
    z += table[mask];
  }
  for (auto& t : table) t /= z;
  return table;
}

std::vector<double> exact_fk_table(const FiniteGraph& g, const FKParams& params) {
  check_exact_size(g);
  const auto m = static_cast<std::size_t>(g.num_edges());
  std::vector<double> table(std::size_t{1} << m);
  long double z = 0.0L;
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = fk_weight(g, mask_config(m, mask), params);
    z += table[mask];
  }
  for (auto& t : table) t = static_cast<double>(t / z);
  return table;
}

std::vector<Rational> exact_even_table(const FiniteGraph& g, const Rational& p) {
  check_exact_size(g);
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie strictly between 0 and 1");
  const Rational ratio = p / (1 - p);
  std::vector<Rational> table(std::size_t{1} << g.num_edges(), Rational(0));
  Rational z = 0;
  for_each_even_subgraph(g, [&](const EdgeConfig& cfg) {
    Rational w = 1;
    for (std::size_t i = 0; i < cfg.count(); ++i) w *= ratio;
    table[config_mask(cfg)] = w;
    z += w;
  });
  for (auto& t : table) t /= z;
  return table;
}

double f_of_beta(double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("f(beta) is defined for beta >= 0");
  return -std::expm1(-2.0 * beta);
}

double dual_params(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");
  return (2.0 - 2.0 * p) / (2.0 - p);
}

Rational dual_params(const Rational& p) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie strictly between 0 and 1");
  return (2 - 2 * p) / (2 - p);
}

EdgeConfig dual_config(const EdgeConfig& cfg) { return cfg.complemented(); }

EdgeConfig edwards_sokal(const SpinGraph& graph, const SpinConfig& spins, double f, Rng& rng) {
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("f must lie in [0, 1]");
  EdgeConfig cfg(static_cast<std::size_t>(graph.num_edges()));
  const auto& edges = graph.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (spins[static_cast<std::size_t>(edges[e].first)] != spins[static_cast<std::size_t>(edges[e].second)]) continue;
    if (rng.uniform() < f) cfg.set(e);
  }
  return cfg;
}

double edwards_sokal_discrepancy(const FiniteGraph& g, std::span<const int> plus_vertices, double beta) {
  check_exact_size(g);
  const SpinGraph graph = SpinGraph::from_graph(g);
  SpinConfig outside(static_cast<std::size_t>(g.num_vertices()), 1);
  std::vector<std::uint8_t> frozen(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : plus_vertices) frozen.at(static_cast<std::size_t>(v)) = 1;
  std::vector<int> interior;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!frozen[static_cast<std::size_t>(v)]) interior.push_back(v);
  const SpinTable spins = exact_local_distribution(graph, outside, interior, beta);

  const double f = f_of_beta(beta);
  const auto m = static_cast<std::size_t>(g.num_edges());
  std::vector<long double> composite(std::size_t{1} << m, 0.0L);
  for (std::size_t s = 0; s < spins.probabilities.size(); ++s) {
    const SpinConfig sigma = spins.configuration(outside, s);
    std::uint32_t equal = 0;
    for (std::size_t e = 0; e < m; ++e) {
      const auto [u, v] = g.edge(static_cast<int>(e));
      if (sigma[static_cast<std::size_t>(u)] == sigma[static_cast<std::size_t>(v)]) equal |= 1U << e;
    }
    // Bond masks are the subsets of the equal-spin edges.
    for (std::uint32_t sub = equal;; sub = (sub - 1) & equal) {
      const int open = std::popcount(sub);
      const int closed = std::popcount(equal) - open;
      composite[sub] += static_cast<long double>(spins.probabilities[s]) * std::pow(static_cast<long double>(f), open) *
                        std::pow(1.0L - static_cast<long double>(f), closed);
      if (sub == 0) break;
    }
  }

  FKParams params;
  params.p = f;
  params.q = 2.0;
  params.boundary = plus_vertices.empty() ? FKBoundary::kFree : FKBoundary::kWired;
  params.boundary_vertices.assign(plus_vertices.begin(), plus_vertices.end());
  const auto fk = exact_fk_table(g, params);
  double worst = 0.0;
  for (std::size_t k = 0; k < fk.size(); ++k)
    worst = std::max(worst, static_cast<double>(std::fabs(composite[k] - static_cast<long double>(fk[k]))));
  return worst;
}

FiniteGraph box_graph(const BoxGeometry& g) {
  FiniteGraph out;
  for (int s = 0; s < g.num_sites(); ++s) {
    const Site site = g.site_at(s);
    out.add_vertex(std::to_string(site.x) + "," + std::to_string(site.y));
  }
  for (const auto& e : g.edges()) out.add_edge(e.from, e.to);
  return out;
}

FiniteGraph box_dual_graph(const BoxGeometry& g) {
  FiniteGraph out;
  std::vector<int> vertex(static_cast<std::size_t>(g.num_dual_sites()), -1);
  for (int k = 0; k < g.num_dual_sites(); ++k) {
    const DualSite d = g.dual_site_at(k);
    if (g.is_interior_face(d)) vertex[static_cast<std::size_t>(k)] = out.add_vertex(std::to_string(d.i) + "," + std::to_string(d.j));
  }
  const int outer = out.add_vertex("out");
  for (auto& v : vertex)
    if (v < 0) v = outer;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.dual_endpoints(e);
    out.add_edge(vertex[static_cast<std::size_t>(a)], vertex[static_cast<std::size_t>(b)]);
  }
  return out;
}

FiniteGraph dual_box_graph(const BoxGeometry& g) {
  FiniteGraph out;
  for (int k = 0; k < g.num_dual_sites(); ++k) {
    const DualSite d = g.dual_site_at(k);
    out.add_vertex(std::to_string(d.i) + "," + std::to_string(d.j));
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.dual_endpoints(e);
    out.add_edge(a, b);
  }
  return out;
}

double duality_discrepancy(const BoxGeometry& g, const Rational& p) {
  const FiniteGraph primal = box_graph(g);
  const FiniteGraph dual = box_dual_graph(g);
  const auto a = exact_fk_table(primal, p, 2, FKBoundary::kFree);
  const auto b = exact_fk_table(dual, dual_params(p), 2, FKBoundary::kFree);
  const std::uint32_t full = (std::uint32_t{1} << g.num_edges()) - 1;
  Rational worst = 0;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    Rational d = a[mask] - b[~mask & full];
    if (d < 0) d = -d;
    if (d > worst) worst = d;
  }
  return to_double(worst);
}

namespace {

// True iff u and v are joined by open edges other than `skip`.
bool joined_without(const FiniteGraph& g, const EdgeConfig& cfg, int skip, int u, int v, std::span<const int> wired,
                    std::vector<std::vector<std::pair<int, int>>>& adj) {
  if (u == v) return true;
  std::vector<std::uint8_t> is_wired(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int w : wired) is_wired[static_cast<std::size_t>(w)] = 1;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::deque<int> queue{u};
  seen[static_cast<std::size_t>(u)] = 1;
  bool wired_done = false;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == v) return true;
    if (is_wired[static_cast<std::size_t>(x)] && !wired_done) {
      wired_done = true;
      for (int w : wired) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    for (const auto& [y, e] : adj[static_cast<std::size_t>(x)]) {
      if (e == skip || !cfg.test(static_cast<std::size_t>(e)) || seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      queue.push_back(y);
    }
  }
  return false;
}

}  // namespace

void fk_glauber_sweep(const FiniteGraph& g, EdgeConfig& cfg, const FKParams& params, Rng& rng) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    adj[static_cast<std::size_t>(u)].emplace_back(v, e);
    adj[static_cast<std::size_t>(v)].emplace_back(u, e);
  }
  const auto wired = wiring(params);
  const double p_bridge = params.p / (params.p + params.q * (1.0 - params.p));
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    const bool joined = joined_without(g, cfg, e, u, v, wired, adj);
    cfg.set(static_cast<std::size_t>(e), rng.uniform() < (joined ? params.p : p_bridge));
  }
}

void fk_swendsen_wang_step(const FiniteGraph& g, EdgeConfig& cfg, const FKParams& params, Rng& rng) {
  if (params.q != 2.0) throw std::invalid_argument("Swendsen-Wang step is implemented for q = 2");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const auto n = static_cast<std::size_t>(g.num_vertices());
  UnionFind uf(n);
  for (int e = 0; e < g.num_edges(); ++e)
    if (cfg.test(static_cast<std::size_t>(e))) uf.unite(g.edge(e).first, g.edge(e).second);
  const auto wired = wiring(params);
  for (std::size_t k = 1; k < wired.size(); ++k) uf.unite(wired[0], wired[k]);
  const int boundary_root = wired.empty() ? -1 : uf.find(wired[0]);

  std::vector<std::int8_t> root_spin(n, 0);
  std::vector<std::int8_t> spin(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto r = static_cast<std::size_t>(uf.find(static_cast<int>(v)));
    if (root_spin[r] == 0) root_spin[r] = static_cast<int>(r) == boundary_root ? 1 : (rng.coin() ? 1 : -1);
    spin[v] = root_spin[r];
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    const bool equal = spin[static_cast<std::size_t>(u)] == spin[static_cast<std::size_t>(v)];
    cfg.set(static_cast<std::size_t>(e), equal && rng.uniform() < params.p);
  }
}

bool OrderingReport::any_violation() const {
  return std::any_of(entries.begin(), entries.end(), [](const OrderingEntry& e) { return e.violation; });
}

OrderingReport compare_mu_to_fk(const BoxGeometry& g, double p, std::size_t samples, int burnin_sweeps, int thinning,
                                std::uint64_t seed) {
  if (!(p > 0.0 && p <= 0.5)) throw std::invalid_argument("ordering comparison needs 0 < p <= 1/2");
  if (burnin_sweeps < 1) throw std::invalid_argument("burn-in must be at least one sweep");
  if (thinning < 1) throw std::invalid_argument("thinning must be at least one sweep");

  const int L = g.half_width();
  const Site origin{0, 0};
  const Site target{std::min(3, L), 0};
  const std::string two_point = "two_point_0_(" + std::to_string(target.x) + ",0)";

  EvenPercolationSampler mu(g, p, seed_stream(seed, 0));
  const FiniteGraph graph = box_graph(g);
  FKParams fk;
  fk.p = std::min(1.0, 2.0 * p);
  fk.q = 2.0;
  fk.boundary = FKBoundary::kFree;
  Rng fk_rng(seed_stream(seed, 1));
  EdgeConfig phi_cfg(static_cast<std::size_t>(g.num_edges()));

  mu.sweep(burnin_sweeps);
  for (int k = 0; k < burnin_sweeps; ++k) fk_swendsen_wang_step(graph, phi_cfg, fk, fk_rng);

  std::size_t mu_cross = 0, phi_cross = 0, mu_conn = 0, phi_conn = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    if (s > 0) {
      mu.sweep(thinning);
      for (int k = 0; k < thinning; ++k) fk_swendsen_wang_step(graph, phi_cfg, fk, fk_rng);
    }
    const EdgeConfig w = mu.sample();
    if (crossing(g, w, Axis::kHorizontal)) ++mu_cross;
    if (connected(g, w, origin, target)) ++mu_conn;
    if (crossing(g, phi_cfg, Axis::kHorizontal)) ++phi_cross;
    if (connected(g, phi_cfg, origin, target)) ++phi_conn;
  }

  OrderingReport report;
  report.p = p;
  report.half_width = L;
  report.samples = samples;
  auto entry = [&](std::string name, std::size_t a, std::size_t b) {
    const double n = static_cast<double>(std::max<std::size_t>(samples, 1));
    OrderingEntry e;
    e.event = std::move(name);
    e.mu = static_cast<double>(a) / n;
    e.phi = static_cast<double>(b) / n;
    e.mu_se = std::sqrt(e.mu * (1.0 - e.mu) / n);
    e.phi_se = std::sqrt(e.phi * (1.0 - e.phi) / n);
    e.violation = e.mu - e.phi > 3.0 * std::sqrt(e.mu_se * e.mu_se + e.phi_se * e.phi_se);
    report.entries.push_back(std::move(e));
  };
  entry("horizontal_crossing_central", mu_cross, phi_cross);
  entry(two_point, mu_conn, phi_conn);
  return report;
}

Rational exact_ordering_gap(const BoxGeometry& g, const Rational& p) {
  if (!(p > 0 && p < Rational(1, 2))) throw std::invalid_argument("exact ordering check needs 0 < p < 1/2");
  const FiniteGraph graph = box_graph(g);
  const auto mu = exact_even_table(graph, p);
  const auto phi = exact_fk_table(graph, 2 * p, 2, FKBoundary::kFree);
  const auto m = static_cast<std::size_t>(graph.num_edges());
  const std::size_t total = std::size_t{1} << m;

  // Up-set probabilities of "all of S open" by a superset-sum transform.
  std::vector<Rational> mu_up(mu.begin(), mu.end());
  std::vector<Rational> phi_up(phi.begin(), phi.end());
  for (std::size_t bit = 0; bit < m; ++bit) {
    for (std::size_t mask = 0; mask < total; ++mask) {
      if (mask & (std::size_t{1} << bit)) continue;
      mu_up[mask] += mu_up[mask | (std::size_t{1} << bit)];
      phi_up[mask] += phi_up[mask | (std::size_t{1} << bit)];
    }
  }
  Rational worst = mu_up[0] - phi_up[0];
  for (std::size_t mask = 0; mask < total; ++mask) worst = std::max(worst, Rational(mu_up[mask] - phi_up[mask]));

  const int n = g.num_sites();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Rational pm = 0;
      Rational pf = 0;
      for (std::size_t mask = 0; mask < total; ++mask) {
        if (mu[mask] == 0 && phi[mask] == 0) continue;
        UnionFind uf(static_cast<std::size_t>(n));
        for (std::size_t e = 0; e < m; ++e)
          if ((mask >> e) & 1U) uf.unite(graph.edge(static_cast<int>(e)).first, graph.edge(static_cast<int>(e)).second);
        if (uf.find(a) == uf.find(b)) {
          pm += mu[mask];
          pf += phi[mask];
        }
      }
      worst = std::max(worst, Rational(pm - pf));
    }
  }
  return worst;
}

}  // namespace eulerperc
