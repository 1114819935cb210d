#pragma once

#include <cstddef>
#include <istream>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eulerperc/bitvector.hpp"

namespace eulerperc {

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) { reset(n); }

  void reset(std::size_t n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(n, 1);
    components_ = n;
  }

  int find(int x) {
    auto* p = parent_.data();
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }

  /// Returns true if the two sets were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --components_;
    return true;
  }

  int set_size(int x) { return size_[static_cast<std::size_t>(find(x))]; }
  std::size_t components() const { return components_; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::size_t components_ = 0;
};

/// Finite undirected multigraph with named vertices and indexed edges.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(int num_vertices);

  /// Adds (or finds) a vertex by name and returns its index.
  int vertex(const std::string& name);
  int add_vertex(std::string name);
  /// Adds an edge and returns its index. Loops and parallel edges are allowed.
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  /// Vertex index by name, or -1.
  int find_vertex(const std::string& name) const;
  /// First edge joining the two named vertices (either orientation), or -1.
  int find_edge(const std::string& u, const std::string& v) const;

  /// Degree counting loops twice.
  std::vector<int> degrees() const;
  int connected_components() const;

  /// Number of components of the spanning subgraph of open edges, with the
  /// vertices listed in `wired` merged into a single vertex.
  int open_components(const EdgeConfig& open, std::span<const int> wired = {}) const;

  /// Text format: one edge per line "u v"; blank lines and lines starting
  /// with '#' are ignored. Throws std::invalid_argument on malformed lines.
  static FiniteGraph parse(std::istream& in);

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace eulerperc
