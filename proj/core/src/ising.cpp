#include "eulerperc/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eulerperc {

double beta_of_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("beta(p) requires 0 < p < 1");
  return 0.5 * std::log((1.0 - p) / p);
}

double p_of_beta(double beta) { return 1.0 / (1.0 + std::exp(2.0 * beta)); }

SpinConfig SpinConfig::negated() const {
  SpinConfig out = *this;
  for (auto& s : out.spins) s = static_cast<std::int8_t>(-s);
  return out;
}

SpinGraph::SpinGraph(int num_vertices, std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  std::vector<int> deg(static_cast<std::size_t>(num_vertices_), 0);
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
      throw std::out_of_range("spin graph edge endpoint out of range");
    }
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  offsets_.assign(static_cast<std::size_t>(num_vertices_) + 1, 0);
  for (int v = 0; v < num_vertices_; ++v) {
    offsets_[static_cast<std::size_t>(v) + 1] = offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    max_degree_ = std::max(max_degree_, deg[static_cast<std::size_t>(v)]);
  }
  nbrs_.resize(static_cast<std::size_t>(offsets_.back()));
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    nbrs_[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = v;
    nbrs_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = u;
  }
}

SpinGraph SpinGraph::from_graph(const FiniteGraph& g) { return SpinGraph(g.num_vertices(), g.edges()); }

SpinGraph SpinGraph::dual_box(const BoxGeometry& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.dual_endpoints(e);
    edges.emplace_back(a, b);
  }
  return SpinGraph(g.num_dual_sites(), std::move(edges));
}

SpinConfig initial_box_config(const BoxGeometry& g, const Boundary& b, std::int8_t face_value) {
  SpinConfig s(static_cast<std::size_t>(g.num_dual_sites()), face_value);
  for (int k = 0; k < g.num_dual_sites(); ++k) {
    if (g.is_interior_face(g.dual_site_at(k))) continue;
    switch (b.kind) {
      case BoundaryKind::kAllPlus:
        s[static_cast<std::size_t>(k)] = 1;
        break;
      case BoundaryKind::kAllMinus:
        s[static_cast<std::size_t>(k)] = -1;
        break;
      case BoundaryKind::kExplicit:
        if (b.coloring.size() != static_cast<std::size_t>(g.num_dual_sites())) {
          throw std::invalid_argument("explicit boundary must color every dual site");
        }
        s[static_cast<std::size_t>(k)] = b.coloring[static_cast<std::size_t>(k)];
        break;
      case BoundaryKind::kFree:
        break;
    }
  }
  return s;
}

std::vector<std::uint8_t> frozen_mask(const BoxGeometry& g, const Boundary& b) {
  std::vector<std::uint8_t> frozen(static_cast<std::size_t>(g.num_dual_sites()), 0);
  if (b.kind == BoundaryKind::kFree) return frozen;
  for (int k = 0; k < g.num_dual_sites(); ++k)
    if (!g.is_interior_face(g.dual_site_at(k))) frozen[static_cast<std::size_t>(k)] = 1;
  return frozen;
}

int hamiltonian(const SpinGraph& graph, const SpinConfig& spins, std::span<const int> interior) {
  if (spins.size() != static_cast<std::size_t>(graph.num_vertices())) {
    throw std::invalid_argument("spin configuration does not cover the graph");
  }
  std::vector<std::uint8_t> inside(static_cast<std::size_t>(graph.num_vertices()), 0);
  for (int v : interior) inside.at(static_cast<std::size_t>(v)) = 1;
  int h = 0;
  for (const auto& [u, v] : graph.edges()) {
    if (inside[static_cast<std::size_t>(u)] || inside[static_cast<std::size_t>(v)]) {
      h -= spins[static_cast<std::size_t>(u)] * spins[static_cast<std::size_t>(v)];
    }
  }
  return h;
}

SpinConfig SpinTable::configuration(const SpinConfig& outside, std::size_t m) const {
  SpinConfig s = outside;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    s[static_cast<std::size_t>(sites[k])] = ((m >> k) & 1U) ? 1 : -1;
  }
  return s;
}

SpinTable exact_local_distribution(const SpinGraph& graph, const SpinConfig& outside, std::span<const int> interior,
                                   double beta) {
  if (interior.size() > static_cast<std::size_t>(kMaxExactSpins)) {
    throw std::invalid_argument("interior too large for exact enumeration (" + std::to_string(interior.size()) +
                                " > " + std::to_string(kMaxExactSpins) + " sites)");
  }
  if (outside.size() != static_cast<std::size_t>(graph.num_vertices())) {
    throw std::invalid_argument("spin configuration does not cover the graph");
  }
  SpinTable table;
  table.sites.assign(interior.begin(), interior.end());
  std::vector<int> slot(static_cast<std::size_t>(graph.num_vertices()), -1);
  for (std::size_t k = 0; k < table.sites.size(); ++k) {
    const int v = table.sites[k];
    if (v < 0 || v >= graph.num_vertices()) throw std::invalid_argument("interior site out of range");
    if (slot[static_cast<std::size_t>(v)] >= 0) throw std::invalid_argument("interior site repeated");
    slot[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }

  // Edges meeting the interior, split by how many ends are enumerated.
  struct Term {
    int a, b;     // slots, or -1
    int fixed;    // product of fixed spins for the -1 ends
  };
  std::vector<Term> terms;
  for (const auto& [u, v] : graph.edges()) {
    const int su = slot[static_cast<std::size_t>(u)];
    const int sv = slot[static_cast<std::size_t>(v)];
    if (su < 0 && sv < 0) continue;
    int fixed = 1;
    if (su < 0) fixed *= outside[static_cast<std::size_t>(u)];
    if (sv < 0) fixed *= outside[static_cast<std::size_t>(v)];
    terms.push_back({su, sv, fixed});
  }

  const std::size_t n_states = std::size_t{1} << table.sites.size();
  std::vector<long double> log_weight(n_states);
  long double max_lw = -INFINITY;
  for (std::size_t m = 0; m < n_states; ++m) {
    int energy = 0;
    for (const Term& t : terms) {
      int prod = t.fixed;
      if (t.a >= 0) prod *= ((m >> t.a) & 1U) ? 1 : -1;
      if (t.b >= 0) prod *= ((m >> t.b) & 1U) ? 1 : -1;
      energy -= prod;
    }
    log_weight[m] = -static_cast<long double>(beta) * energy;
    max_lw = std::max(max_lw, log_weight[m]);
  }
  long double z = 0.0L;
  for (auto& lw : log_weight) {
    lw = std::exp(lw - max_lw);
    z += lw;
  }
  table.probabilities.resize(n_states);
  for (std::size_t m = 0; m < n_states; ++m) table.probabilities[m] = static_cast<double>(log_weight[m] / z);
  return table;
}

SpinTable exact_local_distribution(const BoxGeometry& g, const IsingParams& params, std::span<const int> interior) {
  const SpinGraph graph = SpinGraph::dual_box(g);
  SpinConfig outside(static_cast<std::size_t>(g.num_dual_sites()), 1);
  switch (params.boundary.kind) {
    case BoundaryKind::kAllPlus:
    case BoundaryKind::kFree:
      break;
    case BoundaryKind::kAllMinus:
      outside = SpinConfig(outside.size(), -1);
      break;
    case BoundaryKind::kExplicit:
      if (params.boundary.coloring.size() != outside.size()) {
        throw std::invalid_argument("explicit boundary must color every dual site");
      }
      outside = params.boundary.coloring;
      break;
  }
  std::vector<int> sites(interior.begin(), interior.end());
  if (params.boundary.kind == BoundaryKind::kFree) {
    for (int k = 0; k < g.num_dual_sites(); ++k) {
      if (g.is_ring(g.dual_site_at(k)) && std::find(sites.begin(), sites.end(), k) == sites.end()) {
        sites.push_back(k);
      }
    }
  }
  return exact_local_distribution(graph, outside, sites, params.beta);
}

double heat_bath_plus_probability(int local_field, double beta) {
  return 1.0 / (1.0 + std::exp(-2.0 * beta * local_field));
}

namespace {

std::vector<double> heat_bath_table(int max_degree, double beta) {
  std::vector<double> table(static_cast<std::size_t>(2 * max_degree + 1));
  for (int h = -max_degree; h <= max_degree; ++h) {
    table[static_cast<std::size_t>(h + max_degree)] = heat_bath_plus_probability(h, beta);
  }
  return table;
}

void glauber_with_table(const SpinGraph& graph, SpinConfig& spins, std::span<const std::uint8_t> frozen,
                        const std::vector<double>& table, Rng& rng) {
  const int offset = graph.max_degree();
  auto* s = spins.spins.data();
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (frozen[static_cast<std::size_t>(v)]) continue;
    int h = 0;
    for (int u : graph.neighbors(v)) h += s[u];
    s[v] = rng.uniform() < table[static_cast<std::size_t>(h + offset)] ? 1 : -1;
  }
}

}  // namespace

void glauber_sweep(const SpinGraph& graph, SpinConfig& spins, std::span<const std::uint8_t> frozen, double beta,
                   Rng& rng) {
  if (spins.size() != static_cast<std::size_t>(graph.num_vertices()) ||
      frozen.size() != static_cast<std::size_t>(graph.num_vertices())) {
    throw std::invalid_argument("spin or frozen mask size does not match the graph");
  }
  glauber_with_table(graph, spins, frozen, heat_bath_table(graph.max_degree(), beta), rng);
}

void swendsen_wang_sweep(const SpinGraph& graph, SpinConfig& spins, std::span<const std::uint8_t> frozen, double beta,
                         Rng& rng) {
  if (beta < 0.0) throw std::invalid_argument("Swendsen-Wang update requires beta >= 0");
  const double bond = 1.0 - std::exp(-2.0 * beta);
  const auto n = static_cast<std::size_t>(graph.num_vertices());
  UnionFind uf(n);
  for (const auto& [u, v] : graph.edges()) {
    if (spins[static_cast<std::size_t>(u)] == spins[static_cast<std::size_t>(v)] && rng.uniform() < bond) {
      uf.unite(u, v);
    }
  }
  // Per root: 0 = undecided, 1 = keep, 2 = flip.
  std::vector<std::uint8_t> action(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (frozen[v]) action[static_cast<std::size_t>(uf.find(static_cast<int>(v)))] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    auto& a = action[static_cast<std::size_t>(uf.find(static_cast<int>(v)))];
    if (a == 0) a = rng.coin() ? 2 : 1;
    if (a == 2) spins[v] = static_cast<std::int8_t>(-spins[v]);
  }
}

SpinConfig checkerboard_transform(const BoxGeometry& g, SpinConfig spins) {
  if (spins.size() != static_cast<std::size_t>(g.num_dual_sites())) {
    throw std::invalid_argument("spin configuration does not cover the dual box");
  }
  for (int k = 0; k < g.num_dual_sites(); ++k) {
    const DualSite d = g.dual_site_at(k);
    if (((d.i + d.j) & 1) != 0) spins[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(-spins[static_cast<std::size_t>(k)]);
  }
  return spins;
}

Boundary checkerboard_transform(const BoxGeometry& g, const Boundary& b) {
  if (b.kind == BoundaryKind::kFree) return b;
  return Boundary::explicit_coloring(checkerboard_transform(g, initial_box_config(g, b)));
}

GibbsSampler::GibbsSampler(SpinGraph graph, SpinConfig initial, std::vector<std::uint8_t> frozen, double beta,
                           std::uint64_t seed, bool cluster_moves)
    : graph_(std::move(graph)),
      spins_(std::move(initial)),
      frozen_(std::move(frozen)),
      beta_(beta),
      cluster_moves_(cluster_moves),
      rng_(seed) {
  if (spins_.size() != static_cast<std::size_t>(graph_.num_vertices()) ||
      frozen_.size() != static_cast<std::size_t>(graph_.num_vertices())) {
    throw std::invalid_argument("spin or frozen mask size does not match the graph");
  }
  if (cluster_moves_ && beta_ < 0.0) throw std::invalid_argument("cluster moves require beta >= 0");
}

void GibbsSampler::sweep(int count) {
  const auto table = heat_bath_table(graph_.max_degree(), beta_);
  for (int k = 0; k < count; ++k) {
    glauber_with_table(graph_, spins_, frozen_, table, rng_);
    if (cluster_moves_) swendsen_wang_sweep(graph_, spins_, frozen_, beta_, rng_);
  }
}

namespace {

GibbsSampler make_box_chain(const BoxGeometry& g, const IsingParams& params, std::uint64_t seed, bool cluster_moves) {
  const bool antiferro = params.beta < 0.0;
  const Boundary boundary = antiferro ? checkerboard_transform(g, params.boundary) : params.boundary;
  return GibbsSampler(SpinGraph::dual_box(g), initial_box_config(g, boundary), frozen_mask(g, boundary),
                      std::abs(params.beta), seed, cluster_moves);
}

}  // namespace

BoxIsingSampler::BoxIsingSampler(const BoxGeometry& g, const IsingParams& params, std::uint64_t seed,
                                 bool cluster_moves)
    : geometry_(g), antiferro_(params.beta < 0.0), chain_(make_box_chain(g, params, seed, cluster_moves)) {}

SpinConfig BoxIsingSampler::current() const {
  return antiferro_ ? checkerboard_transform(geometry_, chain_.state()) : chain_.state();
}

int default_burnin_sweeps(int half_width, double beta) {
  const bool near_critical = std::abs(std::abs(beta) - kCriticalBeta) < 0.05;
  return (near_critical ? 2000 : 200) * half_width;
}

std::vector<SpinConfig> sample_gibbs(const BoxGeometry& g, const IsingParams& params, int burnin_sweeps, int n_samples,
                                     int thinning, std::uint64_t seed, bool cluster_moves) {
  if (burnin_sweeps < 1) throw std::invalid_argument("burn-in must be at least one sweep");
  if (thinning < 1) throw std::invalid_argument("thinning must be at least one sweep");
  BoxIsingSampler sampler(g, params, seed, cluster_moves);
  sampler.sweep(burnin_sweeps);
  std::vector<SpinConfig> out;
  out.reserve(static_cast<std::size_t>(std::max(n_samples, 0)));
  for (int k = 0; k < n_samples; ++k) {
    if (k > 0) sampler.sweep(thinning);
    out.push_back(sampler.current());
  }
  return out;
}

std::string spins_to_ascii(const BoxGeometry& g, const SpinConfig& spins) {
  std::string out;
  const int L = g.half_width();
  for (int j = L; j >= -L - 1; --j) {
    for (int i = -L - 1; i <= L; ++i) out.push_back(spins[static_cast<std::size_t>(g.dual_index({i, j}))] > 0 ? '+' : '-');
    out.push_back('\n');
  }
  return out;
}

SpinConfig spins_from_ascii(const BoxGeometry& g, std::string_view text) {
  SpinConfig spins(static_cast<std::size_t>(g.num_dual_sites()), 1);
  const int L = g.half_width();
  int j = L;
  int i = -L - 1;
  for (char c : text) {
    if (c == '\n') {
      if (i != L + 1) throw std::invalid_argument("spin row has wrong length");
      --j;
      i = -L - 1;
      continue;
    }
    if (c != '+' && c != '-') throw std::invalid_argument("spin rows may only contain '+' or '-'");
    if (j < -L - 1 || i > L) throw std::invalid_argument("too many spins for the dual box");
    spins[static_cast<std::size_t>(g.dual_index({i, j}))] = c == '+' ? 1 : -1;
    ++i;
  }
  if (j != -L - 2 || i != -L - 1) throw std::invalid_argument("spin text does not cover the dual box");
  return spins;
}

}  // namespace eulerperc
