#include "eulerperc/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerperc {

FiniteGraph::FiniteGraph(int num_vertices) {
  for (int v = 0; v < num_vertices; ++v) names_.push_back(std::to_string(v));
}

int FiniteGraph::vertex(const std::string& name) {
  if (int v = find_vertex(name); v >= 0) return v;
  return add_vertex(name);
}

int FiniteGraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  return num_vertices() - 1;
}

int FiniteGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw std::out_of_range("edge endpoint is not a vertex");
  }
  edges_.emplace_back(u, v);
  return num_edges() - 1;
}

int FiniteGraph::find_vertex(const std::string& name) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (names_[static_cast<std::size_t>(v)] == name) return v;
  return -1;
}

int FiniteGraph::find_edge(const std::string& u, const std::string& v) const {
  const int a = find_vertex(u);
  const int b = find_vertex(v);
  if (a < 0 || b < 0) return -1;
  for (int e = 0; e < num_edges(); ++e) {
    const auto [x, y] = edges_[static_cast<std::size_t>(e)];
    if ((x == a && y == b) || (x == b && y == a)) return e;
  }
  return -1;
}

std::vector<int> FiniteGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(num_vertices()), 0);
  for (const auto& [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

int FiniteGraph::connected_components() const {
  UnionFind uf(static_cast<std::size_t>(num_vertices()));
  for (const auto& [u, v] : edges_) uf.unite(u, v);
  return static_cast<int>(uf.components());
}

int FiniteGraph::open_components(const EdgeConfig& open, std::span<const int> wired) const {
  if (open.size() != edges_.size()) throw std::invalid_argument("edge configuration size mismatch");
  UnionFind uf(static_cast<std::size_t>(num_vertices()));
  for (std::size_t k = 1; k < wired.size(); ++k) uf.unite(wired[0], wired[k]);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (open.test(e)) uf.unite(edges_[e].first, edges_[e].second);
  return static_cast<int>(uf.components());
}

FiniteGraph FiniteGraph::parse(std::istream& in) {
  FiniteGraph g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string u, v, extra;
    if (!(ss >> u) || u[0] == '#') continue;
    if (!(ss >> v) || (ss >> extra)) {
      throw std::invalid_argument("graph line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    const int a = g.vertex(u);
    const int b = g.vertex(v);
    g.add_edge(a, b);
  }
  return g;
}

}  // namespace eulerperc
