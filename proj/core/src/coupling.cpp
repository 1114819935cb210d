#include "eulerperc/coupling.hpp"

#include <algorithm>
#include <cmath>

#include "eulerperc/contour.hpp"
#include "eulerperc/graph.hpp"

namespace eulerperc {

bool table_marginals_exact(const Rational& p) {
  const auto t = build_table(p);
  const Rational r = 1 - p;
  auto bernoulli = [](unsigned a, const Rational& x) {
    Rational w = 1;
    for (unsigned k = 0; k < 4; ++k) w *= ((a >> k) & 1U) ? x : Rational(1 - x);
    return w;
  };
  Rational total = 0;
  for (unsigned a = 0; a < 16; ++a) {
    total += t.same[a] + t.flip[a];
    if (t.same[a] + t.flip[a] != bernoulli(a, p)) return false;
    const unsigned c = ~a & 0xFU;
    if (t.same[a] + t.flip[c] != bernoulli(a, r)) return false;
  }
  return total == 1;
}

double flip_probability(unsigned pattern, double p) {
  const double ratio = p / (1.0 - p);
  switch (std::popcount(pattern & 0xFU)) {
    case 0:
      return 1.0 - std::pow(ratio, 4);
    case 1:
      return 1.0 - ratio * ratio;
    default:
      return 0.0;
  }
}

unsigned conditional_flip(unsigned pattern, double p, Rng& rng) {
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("conditional flip needs 0 < p < 1/2");
  const double f = flip_probability(pattern, p);
  if (f > 0.0 && rng.uniform() < f) return ~pattern & 0xFU;
  return pattern & 0xFU;
}

std::uint16_t corner_connections(unsigned pattern) {
  UnionFind uf(4);
  for (int k = 0; k < 4; ++k)
    if ((pattern >> k) & 1U) uf.unite(k, (k + 1) % 4);
  std::uint16_t rel = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (uf.find(i) == uf.find(j)) rel |= static_cast<std::uint16_t>(1U << (4 * i + j));
  return rel;
}

bool square_connectivity_dominates(double p) {
  const auto t = build_table(p);
  for (unsigned a = 0; a < 16; ++a) {
    const std::uint16_t before = corner_connections(a);
    if (t.same[a] > 0.0 && (before & ~corner_connections(a)) != 0) return false;
    if (t.flip[a] > 0.0 && (before & ~corner_connections(~a & 0xFU)) != 0) return false;
  }
  return true;
}

bool check_P2(const BoxGeometry& g, const CouplingSample& s) {
  UnionFind uf(static_cast<std::size_t>(g.num_sites()));
  for (int e = 0; e < g.num_edges(); ++e) {
    if (s.omega_tilde.test(static_cast<std::size_t>(e))) uf.unite(g.edge(e).from, g.edge(e).to);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (s.omega.test(static_cast<std::size_t>(e)) && uf.find(g.edge(e).from) != uf.find(g.edge(e).to)) return false;
  }
  return true;
}

bool check_P3(const BoxGeometry& g, const CouplingSample& s) {
  return degree_parities(g, s.omega) == degree_parities(g, s.omega_tilde);
}

bool incomparable(const CouplingSample& s) {
  return !s.omega.is_subset_of(s.omega_tilde) && !s.omega_tilde.is_subset_of(s.omega);
}

namespace {

std::vector<int> union_of(const std::vector<std::array<int, 4>>& squares) {
  std::vector<int> out;
  for (const auto& sq : squares) out.insert(out.end(), sq.begin(), sq.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CouplingSampler::CouplingSampler(const BoxGeometry& g, double p, std::uint64_t seed, bool cluster_moves)
    : geometry_(g),
      p_(p),
      squares_(even_sublattice_squares(g)),
      window_(union_of(squares_)),
      even_(g, window_, p, seed_stream(seed, 0), cluster_moves),
      flips_(seed_stream(seed, 1)) {
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("coupling needs 0 < p < 1/2");
}

CouplingSample CouplingSampler::draw() {
  CouplingSample s{even_.sample(), {}};
  s.omega_tilde = s.omega;
  for (const auto& sq : squares_) {
    unsigned pattern = 0;
    for (unsigned k = 0; k < 4; ++k)
      if (s.omega.test(static_cast<std::size_t>(sq[k]))) pattern |= 1U << k;
    const unsigned out = conditional_flip(pattern, p_, flips_);
    if (out == pattern) continue;
    for (unsigned k = 0; k < 4; ++k) s.omega_tilde.set(static_cast<std::size_t>(sq[k]), ((out >> k) & 1U) != 0);
  }
  return s;
}

namespace {

// Edges of the (at most two) even-sublattice squares closest to the centre.
std::vector<int> central_squares_window(const BoxGeometry& g) {
  auto faces = even_sublattice_faces(g);
  auto squares = even_sublattice_squares(g);
  std::vector<std::size_t> order(faces.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  auto dist = [&](std::size_t k) {
    const double x = faces[k].i + 0.5;
    const double y = faces[k].j + 0.5;
    return x * x + y * y;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist(a) < dist(b); });
  std::vector<int> out;
  for (std::size_t k = 0; k < std::min<std::size_t>(2, order.size()); ++k) {
    const auto& sq = squares[order[k]];
    out.insert(out.end(), sq.begin(), sq.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CouplingReport verify_coupling(const BoxGeometry& g, double p, int burnin_sweeps, int n_samples, int thinning,
                               std::uint64_t seed) {
  if (burnin_sweeps < 1) throw std::invalid_argument("burn-in must be at least one sweep");
  if (thinning < 1) throw std::invalid_argument("thinning must be at least one sweep");
  CouplingSampler sampler(g, p, seed);
  sampler.sweep(burnin_sweeps);

  CouplingReport report;
  report.p = p;
  report.half_width = g.half_width();
  const std::vector<int> tv_window = central_squares_window(g);
  PatternLaw omega_law;
  PatternLaw tilde_law;
  for (int k = 0; k < n_samples; ++k) {
    if (k > 0) sampler.sweep(thinning);
    CouplingSample s = sampler.draw();
    ++report.samples;
    if (!check_P2(g, s)) ++report.p2_violations;
    if (!check_P3(g, s)) ++report.p3_violations;
    if (incomparable(s)) ++report.incomparable;
    omega_law[window_pattern(s.omega, tv_window)] += 1.0;
    tilde_law[window_pattern(s.omega_tilde, tv_window)] += 1.0;
  }
  for (auto* law : {&omega_law, &tilde_law})
    for (auto& [k, v] : *law) v /= static_cast<double>(std::max<std::size_t>(report.samples, 1));
  report.incomparable_fraction =
      report.samples == 0 ? 0.0 : static_cast<double>(report.incomparable) / static_cast<double>(report.samples);

  try {
    const EdgeConfig closed(static_cast<std::size_t>(g.num_edges()));
    const auto exact_omega = exact_even_measure(g, sampler.window(), closed, p);
    const auto exact_tilde = exact_even_measure(g, sampler.window(), closed, 1.0 - p);
    report.p1_tv_omega = total_variation(omega_law, marginal(exact_omega, tv_window));
    report.p1_tv_tilde = total_variation(tilde_law, marginal(exact_tilde, tv_window));
  } catch (const std::invalid_argument&) {
    // Window too large for an exact table: the TV entries stay empty.
  }
  return report;
}

}  // namespace eulerperc
