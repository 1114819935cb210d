#include "eulerperc/clusters.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "eulerperc/even_measure.hpp"
#include "eulerperc/graph.hpp"
#include "eulerperc/ising.hpp"
#include "eulerperc/parallel.hpp"
#include "eulerperc/rng.hpp"

namespace eulerperc {

int ClusterLabeling::largest() const { return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end()); }

namespace {

UnionFind open_forest(const BoxGeometry& g, const EdgeConfig& cfg) {
  if (cfg.size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("edge configuration does not match the box");
  }
  UnionFind uf(static_cast<std::size_t>(g.num_sites()));
  const auto words = cfg.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const auto e = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
      uf.unite(g.edge(e).from, g.edge(e).to);
    }
  }
  return uf;
}

}  // namespace

ClusterLabeling components(const BoxGeometry& g, const EdgeConfig& cfg) {
  UnionFind uf = open_forest(g, cfg);
  ClusterLabeling out;
  out.label.assign(static_cast<std::size_t>(g.num_sites()), -1);
  std::vector<int> label_of_root(static_cast<std::size_t>(g.num_sites()), -1);
  for (int s = 0; s < g.num_sites(); ++s) {
    const int r = uf.find(s);
    int& l = label_of_root[static_cast<std::size_t>(r)];
    if (l < 0) {
      l = out.num_clusters();
      out.sizes.push_back(0);
    }
    out.label[static_cast<std::size_t>(s)] = l;
    ++out.sizes[static_cast<std::size_t>(l)];
  }
  return out;
}

bool connected(const BoxGeometry& g, const EdgeConfig& cfg, Site a, Site b) {
  UnionFind uf = open_forest(g, cfg);
  return uf.find(g.site_index(a)) == uf.find(g.site_index(b));
}

int central_half_width(int half_width) { return std::max(1, half_width / 2); }

namespace {

// Roots of sub-box clusters touching both sides, deduplicated.
std::vector<int> crossing_roots(const BoxGeometry& g, const EdgeConfig& cfg, Axis axis, int h) {
  if (h < 1 || h > g.half_width()) throw std::invalid_argument("sub-box half-width must be in 1..L");
  if (cfg.size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("edge configuration does not match the box");
  }
  UnionFind uf(static_cast<std::size_t>(g.num_sites()));
  for (int y = -h; y <= h; ++y) {
    for (int x = -h; x <= h; ++x) {
      if (x < h) {
        const int e = g.right_edge({x, y});
        if (cfg.test(static_cast<std::size_t>(e))) uf.unite(g.edge(e).from, g.edge(e).to);
      }
      if (y < h) {
        const int e = g.up_edge({x, y});
        if (cfg.test(static_cast<std::size_t>(e))) uf.unite(g.edge(e).from, g.edge(e).to);
      }
    }
  }
  auto side_site = [&](int t, bool far) {
    const int fixed = far ? h : -h;
    return axis == Axis::kHorizontal ? g.site_index({fixed, t}) : g.site_index({t, fixed});
  };
  std::vector<int> near_roots;
  for (int t = -h; t <= h; ++t) near_roots.push_back(uf.find(side_site(t, false)));
  std::sort(near_roots.begin(), near_roots.end());
  std::vector<int> out;
  for (int t = -h; t <= h; ++t) {
    const int r = uf.find(side_site(t, true));
    if (std::binary_search(near_roots.begin(), near_roots.end(), r) && std::find(out.begin(), out.end(), r) == out.end()) {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

bool crossing(const BoxGeometry& g, const EdgeConfig& cfg, Axis axis, int h) {
  return !crossing_roots(g, cfg, axis, h).empty();
}

bool crossing(const BoxGeometry& g, const EdgeConfig& cfg, Axis axis) {
  return crossing(g, cfg, axis, central_half_width(g.half_width()));
}

int crossing_cluster_count(const BoxGeometry& g, const EdgeConfig& cfg, Axis axis, int h) {
  return static_cast<int>(crossing_roots(g, cfg, axis, h).size());
}

double largest_cluster_fraction(const BoxGeometry& g, const EdgeConfig& cfg) {
  const auto c = components(g, cfg);
  return static_cast<double>(c.largest()) / static_cast<double>(g.num_sites());
}

std::pair<double, double> wilson_interval(std::size_t k, std::size_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (phat + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::vector<ScanPoint> threshold_scan(std::span<const double> p_grid, std::span<const int> half_widths,
                                      std::size_t samples, std::uint64_t seed, const ScanOptions& options) {
  if (options.thinning < 1) throw std::invalid_argument("thinning must be at least one sweep");
  if (options.burnin_sweeps < 0) throw std::invalid_argument("burn-in must be nonnegative");
  for (double p : p_grid)
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");

  std::vector<int> ls(half_widths.begin(), half_widths.end());
  std::vector<double> ps(p_grid.begin(), p_grid.end());
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  std::vector<ScanPoint> out(ls.size() * ps.size());
  parallel_for(out.size(), options.threads, [&](std::size_t k) {
    const int L = ls[k / ps.size()];
    const double p = ps[k % ps.size()];
    const BoxGeometry g = BoxGeometry::build(L);
    const int burnin = options.burnin_sweeps > 0 ? options.burnin_sweeps : default_burnin_sweeps(L, beta_of_p(p));
    EvenPercolationSampler sampler(g, p, seed_stream(seed, k), options.cluster_moves);
    sampler.sweep(burnin);
    ScanPoint pt;
    pt.p = p;
    pt.half_width = L;
    double frac_sum = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      if (s > 0) sampler.sweep(options.thinning);
      const EdgeConfig cfg = sampler.sample();
      if (crossing(g, cfg, options.axis)) ++pt.crossings;
      frac_sum += largest_cluster_fraction(g, cfg);
      ++pt.samples;
    }
    pt.crossing_freq = pt.samples == 0 ? 0.0 : static_cast<double>(pt.crossings) / static_cast<double>(pt.samples);
    std::tie(pt.ci_low, pt.ci_high) = wilson_interval(pt.crossings, pt.samples);
    pt.largest_frac_mean = pt.samples == 0 ? 0.0 : frac_sum / static_cast<double>(pt.samples);
    out[k] = pt;
  });
  return out;
}

std::optional<double> half_crossing_point(std::span<const ScanPoint> curve) {
  if (curve.empty()) return std::nullopt;
  // Pool-adjacent-violators fit, weighted by sample count.
  struct Block {
    double value;
    double weight;
    std::size_t count;
  };
  std::vector<Block> blocks;
  for (const auto& pt : curve) {
    blocks.push_back({pt.crossing_freq, static_cast<double>(std::max<std::size_t>(pt.samples, 1)), 1});
    while (blocks.size() > 1 && blocks[blocks.size() - 2].value > blocks.back().value) {
      const Block b = blocks.back();
      blocks.pop_back();
      Block& a = blocks.back();
      a.value = (a.value * a.weight + b.value * b.weight) / (a.weight + b.weight);
      a.weight += b.weight;
      a.count += b.count;
    }
  }
  std::vector<double> fit;
  for (const auto& b : blocks) fit.insert(fit.end(), b.count, b.value);
  if (fit.front() >= 0.5) return curve.front().p;
  for (std::size_t k = 1; k < fit.size(); ++k) {
    if (fit[k] >= 0.5) {
      if (fit[k] == fit[k - 1]) return curve[k].p;
      const double t = (0.5 - fit[k - 1]) / (fit[k] - fit[k - 1]);
      return curve[k - 1].p + t * (curve[k].p - curve[k - 1].p);
    }
  }
  return std::nullopt;
}

std::optional<double> pseudo_intersection(std::span<const ScanPoint> a, std::span<const ScanPoint> b) {
  if (a.size() != b.size() || a.size() < 2) return std::nullopt;
  std::optional<double> best;
  double best_gap = 2.0;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    if (a[k].p != b[k].p || a[k + 1].p != b[k + 1].p) return std::nullopt;
    const double d0 = a[k].crossing_freq - b[k].crossing_freq;
    const double d1 = a[k + 1].crossing_freq - b[k + 1].crossing_freq;
    if (d0 == 0.0 || d1 == 0.0 || (d0 > 0.0) == (d1 > 0.0)) continue;
    const double t = d0 / (d0 - d1);
    const double p = a[k].p + t * (a[k + 1].p - a[k].p);
    const double level =
        0.5 * (a[k].crossing_freq + b[k].crossing_freq + a[k + 1].crossing_freq + b[k + 1].crossing_freq) / 2.0;
    const double gap = std::fabs(level - 0.5);
    if (gap < best_gap) {
      best_gap = gap;
      best = p;
    }
  }
  return best;
}

}  // namespace eulerperc
