#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eulerperc/bitvector.hpp"
#include "eulerperc/lattice.hpp"

namespace eulerperc {

/// Open clusters of a box configuration. Labels run 0..num_clusters-1 in
/// order of the smallest site index of each cluster.
struct ClusterLabeling {
  std::vector<int> label;
  std::vector<int> sizes;

  int num_clusters() const { return static_cast<int>(sizes.size()); }
  int largest() const;
};

ClusterLabeling components(const BoxGeometry& g, const EdgeConfig& cfg);

bool connected(const BoxGeometry& g, const EdgeConfig& cfg, Site a, Site b);

enum class Axis { kHorizontal, kVertical };

/// Half-width of the central sub-box used by crossing(): max(1, L / 2).
int central_half_width(int half_width);

/// True iff an open path using only edges of the sub-box [-h, h]^2 joins its
/// two opposite sides (left/right for kHorizontal, bottom/top for
/// kVertical). Throws std::invalid_argument unless 1 <= h <= L.
bool crossing(const BoxGeometry& g, const EdgeConfig& cfg, Axis axis, int h);
/// Crossing of the central sub-box of half-width central_half_width(L).
bool crossing(const BoxGeometry& g, const EdgeConfig& cfg, Axis axis);

/// Number of distinct sub-box clusters realising the crossing.
int crossing_cluster_count(const BoxGeometry& g, const EdgeConfig& cfg, Axis axis, int h);

/// Largest cluster size over the number of sites.
double largest_cluster_fraction(const BoxGeometry& g, const EdgeConfig& cfg);

/// Wilson score interval for k successes in n trials (z = 1.96 for 95%).
std::pair<double, double> wilson_interval(std::size_t k, std::size_t n, double z = 1.959963984540054);

struct ScanOptions {
  /// Sweeps before the first sample; 0 selects default_burnin_sweeps.
  int burnin_sweeps = 0;
  int thinning = 1;
  bool cluster_moves = true;
  unsigned threads = 1;
  Axis axis = Axis::kHorizontal;
};

struct ScanPoint {
  double p = 0.0;
  int half_width = 0;
  std::size_t samples = 0;
  std::size_t crossings = 0;
  double crossing_freq = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double largest_frac_mean = 0.0;
};

/// One chain per (L, p) pair sampling the even measure on [-L, L]^2. The
/// chain for the pair at position k of the L-major, p-minor grid is seeded
/// with seed_stream(seed, k), so the output does not depend on the thread
/// count. Output is sorted by (L, p).
std::vector<ScanPoint> threshold_scan(std::span<const double> p_grid, std::span<const int> half_widths,
                                      std::size_t samples, std::uint64_t seed, const ScanOptions& options = {});

/// Smallest p where the crossing curve of one L reaches 1/2, by linear
/// interpolation after a pool-adjacent-violators monotone fit. Points must
/// share the same L and be sorted by p.
std::optional<double> half_crossing_point(std::span<const ScanPoint> curve);

/// Point where the two curves (same p grid, sorted) swap order, by linear
/// interpolation of their difference. With several swaps, the one where the
/// curves are closest to 1/2 is returned.
std::optional<double> pseudo_intersection(std::span<const ScanPoint> a, std::span<const ScanPoint> b);

}  // namespace eulerperc
