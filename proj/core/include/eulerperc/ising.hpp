#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerperc/graph.hpp"
#include "eulerperc/lattice.hpp"
#include "eulerperc/rng.hpp"

namespace eulerperc {

/// Critical inverse temperature of the square-lattice Ising model,
/// (1/2) log(1 + sqrt 2).
inline constexpr double kCriticalBeta = 0.44068679350977151262;

/// Inverse temperature whose contour law is even percolation at p:
/// beta = (1/2) log((1 - p) / p). Throws std::domain_error outside (0, 1).
double beta_of_p(double p);
/// Inverse of beta_of_p: p = 1 / (1 + exp(2 beta)).
double p_of_beta(double beta);

/// +1/-1 spin per vertex of a SpinGraph. For the dual box, vertex k is the
/// dual site with BoxGeometry::dual_index k.
struct SpinConfig {
  std::vector<std::int8_t> spins;

  SpinConfig() = default;
  explicit SpinConfig(std::size_t n, std::int8_t value = 1) : spins(n, value) {}

  std::size_t size() const { return spins.size(); }
  std::int8_t operator[](std::size_t i) const { return spins[i]; }
  std::int8_t& operator[](std::size_t i) { return spins[i]; }
  SpinConfig negated() const;
  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;
};

/// Graph of spin sites with one unit ferromagnetic coupling per edge. Parallel
/// edges add their couplings. Neighbour lists are stored in CSR form.
class SpinGraph {
 public:
  SpinGraph(int num_vertices, std::vector<std::pair<int, int>> edges);

  static SpinGraph from_graph(const FiniteGraph& g);
  /// Vertices are the dual sites of the box; edge k is the dual edge crossing
  /// primal edge k.
  static SpinGraph dual_box(const BoxGeometry& g);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const {
    return {nbrs_.data() + offsets_[static_cast<std::size_t>(v)],
            static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)])};
  }
  int max_degree() const { return max_degree_; }

 private:
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> offsets_;
  std::vector<int> nbrs_;
  int max_degree_ = 0;
};

enum class BoundaryKind { kAllPlus, kAllMinus, kExplicit, kFree };

/// Boundary condition on the ring of the dual box. For kExplicit, `coloring`
/// is a full dual-box configuration whose ring entries are used.
struct Boundary {
  BoundaryKind kind = BoundaryKind::kAllPlus;
  SpinConfig coloring;

  static Boundary all_plus() { return {BoundaryKind::kAllPlus, {}}; }
  static Boundary all_minus() { return {BoundaryKind::kAllMinus, {}}; }
  static Boundary free() { return {BoundaryKind::kFree, {}}; }
  static Boundary explicit_coloring(SpinConfig c) { return {BoundaryKind::kExplicit, std::move(c)}; }
};

struct IsingParams {
  double beta = 0.0;
  Boundary boundary;
};

/// Dual-box configuration with ring spins set by the boundary and every face
/// set to `face_value`. Free rings start at `face_value` too.
SpinConfig initial_box_config(const BoxGeometry& g, const Boundary& b, std::int8_t face_value = 1);

/// 1 for ring sites unless the boundary is free.
std::vector<std::uint8_t> frozen_mask(const BoxGeometry& g, const Boundary& b);

/// H = - sum of s_x s_y over edges with at least one end in `interior`.
int hamiltonian(const SpinGraph& graph, const SpinConfig& spins, std::span<const int> interior);

/// Exact conditional law of the spins in `interior` given every other spin.
/// Entry m of `probabilities` is the probability that sites[k] = +1 exactly
/// for the set bits k of m.
struct SpinTable {
  std::vector<int> sites;
  std::vector<double> probabilities;

  /// Spin configuration for table index m, starting from `outside`.
  SpinConfig configuration(const SpinConfig& outside, std::size_t m) const;
};

inline constexpr int kMaxExactSpins = 20;

/// Throws std::invalid_argument if the interior has more than kMaxExactSpins
/// sites, repeats a site, or a site index is out of range.
SpinTable exact_local_distribution(const SpinGraph& graph, const SpinConfig& outside, std::span<const int> interior,
                                   double beta);

/// Box form: interior sites are enumerated, every other dual site takes its
/// value from the boundary (faces outside the interior must be given by an
/// explicit coloring). With a free boundary the ring is enumerated as well.
SpinTable exact_local_distribution(const BoxGeometry& g, const IsingParams& params, std::span<const int> interior);

/// Heat-bath probability that a spin with neighbour sum `local_field` is +1.
double heat_bath_plus_probability(int local_field, double beta);

/// One sequential heat-bath sweep over the non-frozen vertices.
void glauber_sweep(const SpinGraph& graph, SpinConfig& spins, std::span<const std::uint8_t> frozen, double beta,
                   Rng& rng);

/// One Swendsen-Wang update: equal neighbours are bonded with probability
/// 1 - exp(-2 beta), and each bond cluster without frozen vertices is flipped
/// with probability 1/2. Requires beta >= 0.
void swendsen_wang_sweep(const SpinGraph& graph, SpinConfig& spins, std::span<const std::uint8_t> frozen, double beta,
                         Rng& rng);

/// Spin at dual site (i, j) multiplied by (-1)^(i + j).
SpinConfig checkerboard_transform(const BoxGeometry& g, SpinConfig spins);
Boundary checkerboard_transform(const BoxGeometry& g, const Boundary& b);

/// Markov chain on an arbitrary spin graph. A sweep is a heat-bath sweep,
/// followed by a Swendsen-Wang update when cluster moves are enabled.
class GibbsSampler {
 public:
  GibbsSampler(SpinGraph graph, SpinConfig initial, std::vector<std::uint8_t> frozen, double beta, std::uint64_t seed,
               bool cluster_moves);

  void sweep(int count = 1);
  const SpinConfig& state() const { return spins_; }
  const SpinGraph& graph() const { return graph_; }
  double beta() const { return beta_; }

 private:
  SpinGraph graph_;
  SpinConfig spins_;
  std::vector<std::uint8_t> frozen_;
  double beta_;
  bool cluster_moves_;
  Rng rng_;
};

/// Ising chain on the dual box. Negative beta is never simulated directly: the
/// chain runs at |beta| with the checkerboard image of the boundary and
/// current() applies the checkerboard map, which is exact in law.
class BoxIsingSampler {
 public:
  BoxIsingSampler(const BoxGeometry& g, const IsingParams& params, std::uint64_t seed, bool cluster_moves = true);

  void sweep(int count = 1) { chain_.sweep(count); }
  SpinConfig current() const;
  /// State of the underlying ferromagnetic chain.
  const SpinConfig& chain_state() const { return chain_.state(); }
  bool antiferromagnetic() const { return antiferro_; }
  const BoxGeometry& geometry() const { return geometry_; }

 private:
  BoxGeometry geometry_;
  bool antiferro_;
  GibbsSampler chain_;
};

/// 200 L sweeps, or 2000 L when |beta| is within 0.05 of the critical value.
int default_burnin_sweeps(int half_width, double beta);

/// Samples after `burnin_sweeps`, taken every `thinning` sweeps. Throws
/// std::invalid_argument if burnin_sweeps < 1 or thinning < 1.
std::vector<SpinConfig> sample_gibbs(const BoxGeometry& g, const IsingParams& params, int burnin_sweeps, int n_samples,
                                     int thinning, std::uint64_t seed, bool cluster_moves = true);

/// One line per dual-site row, top row (largest j) first, '+' or '-'.
std::string spins_to_ascii(const BoxGeometry& g, const SpinConfig& spins);
SpinConfig spins_from_ascii(const BoxGeometry& g, std::string_view text);

}  // namespace eulerperc
