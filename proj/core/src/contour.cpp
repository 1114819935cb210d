#include "eulerperc/contour.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace eulerperc {

namespace {

void check_size(const BoxGeometry& g, const EdgeConfig& cfg) {
  if (cfg.size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("edge configuration does not match the box");
  }
}

}  // namespace

std::vector<std::uint8_t> degree_parities(const BoxGeometry& g, const EdgeConfig& cfg) {
  check_size(g, cfg);
  std::vector<std::uint8_t> parity(static_cast<std::size_t>(g.num_sites()), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!cfg.test(static_cast<std::size_t>(e))) continue;
    const Edge& edge = g.edge(e);
    parity[static_cast<std::size_t>(edge.from)] ^= 1U;
    parity[static_cast<std::size_t>(edge.to)] ^= 1U;
  }
  return parity;
}

bool is_even(const BoxGeometry& g, const EdgeConfig& cfg, std::span<const int> sites) {
  const auto parity = degree_parities(g, cfg);
  return std::none_of(sites.begin(), sites.end(), [&](int s) { return parity.at(static_cast<std::size_t>(s)) != 0; });
}

bool is_even(const BoxGeometry& g, const EdgeConfig& cfg) {
  const auto parity = degree_parities(g, cfg);
  return std::all_of(parity.begin(), parity.end(), [](std::uint8_t b) { return b == 0; });
}

EdgeConfig contours(const BoxGeometry& g, const SpinConfig& spins) {
  if (spins.size() != static_cast<std::size_t>(g.num_dual_sites())) {
    throw std::invalid_argument("spin configuration does not cover the dual box");
  }
  EdgeConfig cfg(static_cast<std::size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.dual_endpoints(e);
    if (spins[static_cast<std::size_t>(a)] != spins[static_cast<std::size_t>(b)]) cfg.set(static_cast<std::size_t>(e));
  }
  return cfg;
}

EdgeConfig contours(const SpinGraph& graph, const SpinConfig& spins) {
  if (spins.size() != static_cast<std::size_t>(graph.num_vertices())) {
    throw std::invalid_argument("spin configuration does not cover the graph");
  }
  EdgeConfig cfg(static_cast<std::size_t>(graph.num_edges()));
  for (int e = 0; e < graph.num_edges(); ++e) {
    const auto [a, b] = graph.edges()[static_cast<std::size_t>(e)];
    if (spins[static_cast<std::size_t>(a)] != spins[static_cast<std::size_t>(b)]) cfg.set(static_cast<std::size_t>(e));
  }
  return cfg;
}

SpinConfig coloring_of(const BoxGeometry& g, const EdgeConfig& cfg, std::int8_t root_value) {
  check_size(g, cfg);
  if (root_value != 1 && root_value != -1) throw std::invalid_argument("root value must be +1 or -1");
  if (!is_even(g, cfg)) throw std::invalid_argument("edge configuration is not even; no consistent coloring exists");

  // Closed unless the crossed primal edge is inside the box and open.
  auto crossed_open = [&](DualSite a, DualSite b) {
    int e = -1;
    if (a.j == b.j) {
      e = g.up_edge({std::max(a.i, b.i), a.j});
    } else {
      e = g.right_edge({a.i, std::max(a.j, b.j)});
    }
    return e >= 0 && cfg.test(static_cast<std::size_t>(e));
  };

  SpinConfig c(static_cast<std::size_t>(g.num_dual_sites()), 0);
  const int root = g.root_dual_index();
  c[static_cast<std::size_t>(root)] = root_value;
  std::deque<int> queue{root};
  constexpr int kDi[] = {1, -1, 0, 0};
  constexpr int kDj[] = {0, 0, 1, -1};
  while (!queue.empty()) {
    const int k = queue.front();
    queue.pop_front();
    const DualSite a = g.dual_site_at(k);
    for (int d = 0; d < 4; ++d) {
      const DualSite b{a.i + kDi[d], a.j + kDj[d]};
      if (!g.contains_dual(b)) continue;
      const int kb = g.dual_index(b);
      const auto expected = static_cast<std::int8_t>(crossed_open(a, b) ? -c[static_cast<std::size_t>(k)]
                                                                      : c[static_cast<std::size_t>(k)]);
      if (c[static_cast<std::size_t>(kb)] == 0) {
        c[static_cast<std::size_t>(kb)] = expected;
        queue.push_back(kb);
      } else if (c[static_cast<std::size_t>(kb)] != expected) {
        throw std::invalid_argument("edge configuration admits no consistent coloring");
      }
    }
  }
  return c;
}

std::vector<int> star_chain_from_path(const BoxGeometry& g, const SpinConfig& spins, std::span<const int> path) {
  if (path.empty()) return {};
  const EdgeConfig cfg = contours(g, spins);
  std::vector<int> visited;
  int tail = -1;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const int e = path[k];
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("path edge index out of range");
    if (!cfg.test(static_cast<std::size_t>(e))) throw std::invalid_argument("path edge is not a contour edge");
    const Edge& edge = g.edge(e);
    if (k == 0) {
      // Orient the first edge towards the second one when there is one.
      int start = edge.from;
      int end = edge.to;
      if (path.size() > 1) {
        const Edge& next = g.edge(path[1]);
        if (edge.from == next.from || edge.from == next.to) std::swap(start, end);
      }
      visited = {start, end};
      tail = end;
      continue;
    }
    int next_site = -1;
    if (edge.from == tail) {
      next_site = edge.to;
    } else if (edge.to == tail) {
      next_site = edge.from;
    } else {
      throw std::invalid_argument("consecutive path edges do not share an endpoint");
    }
    if (std::find(visited.begin(), visited.end(), next_site) != visited.end()) {
      throw std::invalid_argument("path is not self-avoiding");
    }
    visited.push_back(next_site);
    tail = next_site;
  }

  std::vector<int> chain;
  chain.reserve(path.size());
  for (int e : path) {
    const auto [a, b] = g.dual_endpoints(e);
    chain.push_back(spins[static_cast<std::size_t>(a)] > 0 ? a : b);
  }
  return chain;
}

std::string edges_to_ascii(const BoxGeometry& g, const EdgeConfig& cfg) {
  check_size(g, cfg);
  const int L = g.half_width();
  std::string out;
  for (int y = L; y >= -L; --y) {
    for (int x = -L; x <= L; ++x) {
      out.push_back('o');
      if (x < L) out.push_back(cfg.test(static_cast<std::size_t>(g.right_edge({x, y}))) ? '-' : ' ');
    }
    out.push_back('\n');
    if (y == -L) break;
    for (int x = -L; x <= L; ++x) {
      out.push_back(cfg.test(static_cast<std::size_t>(g.up_edge({x, y - 1}))) ? '|' : ' ');
      if (x < L) out.push_back(' ');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace eulerperc
