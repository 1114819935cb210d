#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "eulerperc/bitvector.hpp"
#include "eulerperc/ising.hpp"
#include "eulerperc/lattice.hpp"
#include "eulerperc/polynomial.hpp"

namespace eulerperc {

/// Thrown when no even configuration agrees with the given boundary.
class UnsatisfiableBoundary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxWindowEdges = 64;
inline constexpr int kMaxCycleRank = 22;

/// Window law of an edge configuration, keyed by pattern: bit k of the key
/// is the state of window[k].
using PatternLaw = std::map<std::uint64_t, double>;

/// Even-percolation measure on a window of box edges with every other box
/// edge fixed by a boundary configuration. Evenness is required at every
/// site of the box, so edges leaving the box count as closed.
struct EvenBoxMeasure {
  std::vector<int> window;
  EdgeConfig boundary;
  double p = 0.5;
  /// Even completions, sorted, and their probabilities.
  std::vector<std::uint64_t> patterns;
  std::vector<double> probabilities;
  /// Entry k: number of completions with k open window edges.
  std::vector<std::uint64_t> counts_by_open;

  /// Full box configuration for completion `index`.
  EdgeConfig configuration(const BoxGeometry& g, std::size_t index) const;
  /// 0 for patterns that are not even completions.
  double probability_of(std::uint64_t pattern) const;
  PatternLaw law() const;
  /// Sum over completions of q^{#open in window}.
  IntPolynomial generating_polynomial() const;
};

/// Exact table of the even measure with weight (p / (1 - p))^{#open in
/// window}, built from a particular solution and the kernel of the parity
/// system over GF(2). Throws std::invalid_argument for p outside (0, 1),
/// repeated or out-of-range window edges, more than kMaxWindowEdges window
/// edges or a cycle space above kMaxCycleRank, and UnsatisfiableBoundary
/// when there is no even completion.
EvenBoxMeasure exact_even_measure(const BoxGeometry& g, std::span<const int> window, const EdgeConfig& boundary,
                                  double p);

std::vector<int> all_edges(const BoxGeometry& g);
/// E(D): box edges with at least one dual endpoint in D, in increasing order.
std::vector<int> edges_touching(const BoxGeometry& g, std::span<const int> dual_sites);

/// Pattern of cfg on the window (window size at most 64).
std::uint64_t window_pattern(const EdgeConfig& cfg, std::span<const int> window);
PatternLaw marginal(const EvenBoxMeasure& m, std::span<const int> sub_window);
PatternLaw empirical_law(std::span<const EdgeConfig> samples, std::span<const int> window);
double total_variation(const PatternLaw& a, const PatternLaw& b);

/// Sampler for the even measure on the whole box: an Ising chain on the dual
/// box at beta(p) with all-plus ring, read through the contour map. For
/// p > 1/2 the chain runs through the checkerboard route.
class EvenPercolationSampler {
 public:
  EvenPercolationSampler(const BoxGeometry& g, double p, std::uint64_t seed, bool cluster_moves = true);

  void sweep(int count = 1) { ising_.sweep(count); }
  EdgeConfig sample() const;
  SpinConfig spins() const { return ising_.current(); }
  const BoxGeometry& geometry() const { return ising_.geometry(); }

 private:
  BoxIsingSampler ising_;
};

/// Samples of the even measure on the box with all-plus boundary. Throws
/// std::invalid_argument for p outside (0, 1), burnin_sweeps < 1 or
/// thinning < 1.
std::vector<EdgeConfig> sample_mu_p(const BoxGeometry& g, double p, int burnin_sweeps, int n_samples, int thinning,
                                    std::uint64_t seed, bool cluster_moves = true);

/// Dual spin graph of an edge window: dual sites that can be joined without
/// crossing a window edge are merged into one vertex, and every window edge
/// whose sides fall in different vertices becomes a spin edge. The vertex
/// holding the ring is frozen. Contours of this graph are exactly the even
/// configurations supported on the window.
struct WindowDual {
  std::vector<int> window;
  std::vector<int> vertex_of_dual_site;
  /// Box edge of spin edge k.
  std::vector<int> box_edge;
  int ring_vertex = 0;
  SpinGraph graph{0, {}};

  static WindowDual build(const BoxGeometry& g, std::span<const int> window);
  EdgeConfig to_box(const BoxGeometry& g, const SpinConfig& spins) const;
};

/// Sampler of the even measure on a window with all other box edges closed.
/// Requires p <= 1/2 (ferromagnetic dual); throws std::invalid_argument
/// otherwise.
class WindowEvenSampler {
 public:
  WindowEvenSampler(const BoxGeometry& g, std::span<const int> window, double p, std::uint64_t seed,
                    bool cluster_moves = true);

  void sweep(int count = 1) { chain_.sweep(count); }
  EdgeConfig sample() const { return dual_.to_box(geometry_, chain_.state()); }
  const WindowDual& dual() const { return dual_; }

 private:
  BoxGeometry geometry_;
  WindowDual dual_;
  GibbsSampler chain_;
};

struct LemmaImageReport {
  std::size_t interior_sites = 0;
  std::size_t window_edges = 0;
  std::size_t ising_states = 0;
  std::size_t even_completions = 0;
  std::size_t image_patterns = 0;
  double max_discrepancy = 0.0;
};

/// Pushes the exact Ising law on `interior` (dual site indices) with the rest
/// of the dual box fixed to `coloring` through the contour map, and compares
/// it on E(interior) with the exact even measure whose boundary is the
/// contour configuration of `coloring`. Throws std::invalid_argument for an
/// interior above kMaxExactSpins sites, an interior whose complement in the
/// dual box is not connected, or a coloring that does not cover the dual box.
LemmaImageReport verify_lemma_image(const BoxGeometry& g, std::span<const int> interior, const SpinConfig& coloring,
                                    double p);

}  // namespace eulerperc
