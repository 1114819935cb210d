#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eulerperc/bitvector.hpp"
#include "eulerperc/even_measure.hpp"
#include "eulerperc/lattice.hpp"
#include "eulerperc/polynomial.hpp"
#include "eulerperc/rng.hpp"

namespace eulerperc {

/// Joint law on one unit square: for each local pattern a (bit k = edge k of
/// the square in face_edges order) the mass of (omega, omega~) = (a, a) and
/// of (a, complement of a).
template <typename T>
struct SquareCouplingTable {
  T p{};
  std::array<T, 16> same{};
  std::array<T, 16> flip{};
};

/// Entries are polynomials in p; they are all nonnegative exactly when
/// p < 1/2, so p outside (0, 1/2) is rejected with std::invalid_argument.
template <typename T>
SquareCouplingTable<T> build_table(const T& p) {
  if (!(p > 0 && p < T(1) / 2)) throw std::invalid_argument("coupling table needs 0 < p < 1/2; entries turn negative");
  const T r = 1 - p;
  SquareCouplingTable<T> t;
  t.p = p;
  for (unsigned a = 0; a < 16; ++a) {
    const int w = std::popcount(a);
    T same{};
    T flip{};
    switch (w) {
      case 0:
        same = p * p * p * p;
        flip = r * r * r * r - p * p * p * p;
        break;
      case 1:
        same = p * p * p * r;
        flip = p * r * r * r - p * p * p * r;
        break;
      case 2:
        same = p * p * r * r;
        break;
      case 3:
        same = p * p * p * r;
        break;
      default:
        same = p * p * p * p;
        break;
    }
    t.same[a] = same;
    t.flip[a] = flip;
  }
  return t;
}

/// Exact check that the first marginal of build_table(p) is Ber(p)^4 and
/// the second is Ber(1 - p)^4.
bool table_marginals_exact(const Rational& p);

/// Probability of the complement move given omega's pattern on a square:
/// 1 - (p/(1-p))^4 with no open edge, 1 - (p/(1-p))^2 with one, else 0.
double flip_probability(unsigned pattern, double p);

/// Draws omega~ on one square given omega's 4-bit pattern.
unsigned conditional_flip(unsigned pattern, double p, Rng& rng);

/// Connectivity relation of the four corners of a square (corner k is the
/// start of edge k) under a pattern: bit 4*i + j set iff corners i and j are
/// joined by open edges of the square.
std::uint16_t corner_connections(unsigned pattern);

/// True iff for every pattern, the pattern produced by each move with
/// positive mass joins every corner pair the original joins.
bool square_connectivity_dominates(double p);

struct CouplingSample {
  EdgeConfig omega;
  EdgeConfig omega_tilde;
};

/// Every pair of sites joined in omega is joined in omega~.
bool check_P2(const BoxGeometry& g, const CouplingSample& s);
/// Same open-degree parity at every site.
bool check_P3(const BoxGeometry& g, const CouplingSample& s);
/// Neither configuration contains the other.
bool incomparable(const CouplingSample& s);

/// Coupled sampler on the box. E' is the union of the even-sublattice
/// squares; omega is drawn from the even measure supported on E' (edges
/// outside E' closed) and omega~ from omega square by square. Requires
/// 0 < p < 1/2.
class CouplingSampler {
 public:
  CouplingSampler(const BoxGeometry& g, double p, std::uint64_t seed, bool cluster_moves = true);

  void sweep(int count = 1) { even_.sweep(count); }
  CouplingSample draw();
  const std::vector<std::array<int, 4>>& squares() const { return squares_; }
  const std::vector<int>& window() const { return window_; }

 private:
  BoxGeometry geometry_;
  double p_;
  std::vector<std::array<int, 4>> squares_;
  std::vector<int> window_;
  WindowEvenSampler even_;
  Rng flips_;
};

struct CouplingReport {
  double p = 0.0;
  int half_width = 0;
  std::size_t samples = 0;
  /// TV distances of window laws against exact tables, when computable.
  std::optional<double> p1_tv_omega;
  std::optional<double> p1_tv_tilde;
  std::size_t p2_violations = 0;
  std::size_t p3_violations = 0;
  std::size_t incomparable = 0;
  double incomparable_fraction = 0.0;
};

/// Runs the coupled sampler and checks every sample. The TV entries compare
/// the laws of omega and omega~ on the two even-sublattice squares nearest
/// the centre with exact marginals at p and 1 - p; they stay empty when the
/// whole window is too large for exact_even_measure.
CouplingReport verify_coupling(const BoxGeometry& g, double p, int burnin_sweeps, int n_samples, int thinning,
                               std::uint64_t seed);

}  // namespace eulerperc
