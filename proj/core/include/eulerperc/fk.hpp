#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eulerperc/bitvector.hpp"
#include "eulerperc/graph.hpp"
#include "eulerperc/ising.hpp"
#include "eulerperc/lattice.hpp"
#include "eulerperc/polynomial.hpp"
#include "eulerperc/rng.hpp"

namespace eulerperc {

/// 1 - 1/sqrt 2, the critical parameter of even percolation.
inline constexpr double kCriticalEvenP = 0.29289321881345247560;
/// sqrt 2 / (1 + sqrt 2), the self-dual point of the q = 2 model.
inline constexpr double kSelfDualFK = 0.58578643762690495120;

enum class FKBoundary { kFree, kWired };

/// Random-cluster parameters. With a wired boundary the listed boundary
/// vertices are merged into one when clusters are counted.
struct FKParams {
  double p = 0.5;
  double q = 2.0;
  FKBoundary boundary = FKBoundary::kFree;
  std::vector<int> boundary_vertices;
};

/// Number of open clusters k counted under the boundary of `params`.
int fk_clusters(const FiniteGraph& g, const EdgeConfig& cfg, const FKParams& params);

/// (p / (1 - p))^{#open} q^k, unnormalized. Throws std::invalid_argument
/// unless 0 < p < 1 and q > 0.
double fk_weight(const FiniteGraph& g, const EdgeConfig& cfg, const FKParams& params);
/// Exact form with rational p and integer q.
Rational fk_weight_exact(const FiniteGraph& g, const EdgeConfig& cfg, const Rational& p, int q, FKBoundary boundary,
                         std::span<const int> boundary_vertices = {});

inline constexpr int kMaxExactFKEdges = 20;

/// Normalized law indexed by edge mask (bit e = edge e). Throws
/// std::invalid_argument above kMaxExactFKEdges edges.
std::vector<Rational> exact_fk_table(const FiniteGraph& g, const Rational& p, int q, FKBoundary boundary,
                                     std::span<const int> boundary_vertices = {});
std::vector<double> exact_fk_table(const FiniteGraph& g, const FKParams& params);

/// Normalized even-percolation law of a finite graph indexed by edge mask.
std::vector<Rational> exact_even_table(const FiniteGraph& g, const Rational& p);

/// 1 - exp(-2 beta); throws std::invalid_argument for negative beta.
double f_of_beta(double beta);

/// (2 - 2p) / (2 - p); throws std::invalid_argument outside (0, 1).
double dual_params(double p);
Rational dual_params(const Rational& p);

/// Dual edge k crosses primal edge k and is open iff the primal one is
/// closed.
EdgeConfig dual_config(const EdgeConfig& cfg);

/// Keeps each edge of the spin graph between equal spins open with
/// probability f; edges between unequal spins are closed.
EdgeConfig edwards_sokal(const SpinGraph& graph, const SpinConfig& spins, double f, Rng& rng);

/// Law of the bonds obtained by drawing exact Ising spins at beta on g (the
/// vertices in `plus_vertices` frozen at +1) and applying edwards_sokal with
/// f(beta), compared with the exact FK law at p = f(beta), q = 2, wired on
/// the frozen vertices (free when there are none). Returns the maximum
/// absolute difference over edge masks.
double edwards_sokal_discrepancy(const FiniteGraph& g, std::span<const int> plus_vertices, double beta);

/// Box [-L, L]^2 as a finite graph; vertex and edge indices match the
/// geometry.
FiniteGraph box_graph(const BoxGeometry& g);
/// Planar dual of box_graph: one vertex per face (named "i,j") and one outer
/// vertex "out" standing for the ring; edge k crosses primal edge k.
FiniteGraph box_dual_graph(const BoxGeometry& g);
/// Vertex and edge sets of the dual box restricted to the ring-plus-faces
/// spin graph: dual sites as vertices, edge k crossing primal edge k.
FiniteGraph dual_box_graph(const BoxGeometry& g);

/// Maximum over primal masks of |phi_free(G, p)(w) - phi(G*, p*)(dual w)|
/// where G* is box_dual_graph (free, its outer vertex plays the wiring).
double duality_discrepancy(const BoxGeometry& g, const Rational& p);

/// Single-bond heat bath: each edge is resampled given the rest with odds
/// p / (1 - p) times q^{-1} when it would join two clusters.
void fk_glauber_sweep(const FiniteGraph& g, EdgeConfig& cfg, const FKParams& params, Rng& rng);

/// One Swendsen-Wang step for q = 2: each open cluster receives a uniform
/// spin (the wired boundary cluster gets +1) and bonds are redrawn between
/// equal spins with probability p.
void fk_swendsen_wang_step(const FiniteGraph& g, EdgeConfig& cfg, const FKParams& params, Rng& rng);

struct OrderingEntry {
  std::string event;
  double mu = 0.0;
  double mu_se = 0.0;
  double phi = 0.0;
  double phi_se = 0.0;
  /// mu - phi exceeds 3 combined standard errors.
  bool violation = false;
};

struct OrderingReport {
  double p = 0.0;
  int half_width = 0;
  std::size_t samples = 0;
  std::vector<OrderingEntry> entries;
  bool any_violation() const;
};

/// Monte Carlo comparison of mu_p on [-L, L]^2 (all-plus dual ring) with the
/// free FK measure phi(2p, 2) on the same box, for the horizontal crossing of
/// the central sub-box and the two-point event 0 <-> (min(3, L), 0). FK
/// samples come from Swendsen-Wang steps. Requires 0 < p <= 1/2.
OrderingReport compare_mu_to_fk(const BoxGeometry& g, double p, std::size_t samples, int burnin_sweeps, int thinning,
                                std::uint64_t seed);

/// Exact check on a small box: the largest value of mu_p(A) - phi(2p, 2)(A)
/// over the cylinder events {all edges of S open} for every edge set S and
/// the two-point events for every pair of sites. Nonpositive when the
/// ordering holds. Needs at most kMaxExactFKEdges edges.
Rational exact_ordering_gap(const BoxGeometry& g, const Rational& p);

}  // namespace eulerperc
