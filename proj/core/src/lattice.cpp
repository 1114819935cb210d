#include "eulerperc/lattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eulerperc {

bool same_segment(const Segment& a, const Segment& b) {
  const bool direct = a.ax == b.ax && a.ay == b.ay && a.bx == b.bx && a.by == b.by;
  const bool swapped = a.ax == b.bx && a.ay == b.by && a.bx == b.ax && a.by == b.ay;
  return direct || swapped;
}

Segment crossing_segment(const Segment& s) {
  // Midpoint in doubled coordinates is integral for unit segments.
  const int mx = (s.ax + s.bx) / 2;
  const int my = (s.ay + s.by) / 2;
  const int hx = s.bx - mx;
  const int hy = s.by - my;
  // Quarter turn of the half-vector.
  return Segment{mx + hy, my - hx, mx - hy, my + hx};
}

BoxGeometry::BoxGeometry(int half_width) : half_width_(half_width) {}

BoxGeometry BoxGeometry::build(int half_width) {
  if (half_width < 1) {
    throw std::invalid_argument("box half-width must be >= 1, got " + std::to_string(half_width));
  }
  BoxGeometry g(half_width);
  const int L = half_width;
  g.right_edge_.assign(static_cast<std::size_t>(g.num_sites()), -1);
  g.up_edge_.assign(static_cast<std::size_t>(g.num_sites()), -1);
  g.edges_.reserve(static_cast<std::size_t>(2 * g.side_sites() * 2 * L));
  for (int y = -L; y <= L; ++y) {
    for (int x = -L; x <= L; ++x) {
      const int s = g.site_index({x, y});
      if (x < L) {
        g.right_edge_[static_cast<std::size_t>(s)] = g.num_edges();
        g.edges_.push_back(Edge{s, g.site_index({x + 1, y}), Site{x, y}, Direction::kRight});
      }
      if (y < L) {
        g.up_edge_[static_cast<std::size_t>(s)] = g.num_edges();
        g.edges_.push_back(Edge{s, g.site_index({x, y + 1}), Site{x, y}, Direction::kUp});
      }
    }
  }
  return g;
}

bool BoxGeometry::contains(Site s) const {
  return std::abs(s.x) <= half_width_ && std::abs(s.y) <= half_width_;
}

int BoxGeometry::site_index(Site s) const {
  if (!contains(s)) {
    throw std::out_of_range("site (" + std::to_string(s.x) + "," + std::to_string(s.y) + ") outside box");
  }
  return (s.y + half_width_) * side_sites() + (s.x + half_width_);
}

Site BoxGeometry::site_at(int index) const {
  return Site{index % side_sites() - half_width_, index / side_sites() - half_width_};
}

int BoxGeometry::right_edge(Site s) const {
  if (!contains(s)) return -1;
  return right_edge_[static_cast<std::size_t>(site_index(s))];
}

int BoxGeometry::up_edge(Site s) const {
  if (!contains(s)) return -1;
  return up_edge_[static_cast<std::size_t>(site_index(s))];
}

std::vector<int> BoxGeometry::incident_edges(Site s) const {
  site_index(s);  // range check
  std::vector<int> out;
  out.reserve(4);
  if (int e = right_edge(s); e >= 0) out.push_back(e);
  if (int e = up_edge(s); e >= 0) out.push_back(e);
  if (int e = right_edge({s.x - 1, s.y}); e >= 0) out.push_back(e);
  if (int e = up_edge({s.x, s.y - 1}); e >= 0) out.push_back(e);
  return out;
}

SiteNeighborhood BoxGeometry::neighborhood(Site s) const {
  site_index(s);
  SiteNeighborhood n{s, {}, {}};
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const Site t{s.x + dx, s.y + dy};
      if (!contains(t)) continue;
      n.star_neighbors.push_back(t);
      if (dx == 0 || dy == 0) n.neighbors.push_back(t);
    }
  }
  return n;
}

bool BoxGeometry::contains_dual(DualSite d) const {
  return d.i >= -half_width_ - 1 && d.i <= half_width_ && d.j >= -half_width_ - 1 && d.j <= half_width_;
}

int BoxGeometry::dual_index(DualSite d) const {
  if (!contains_dual(d)) {
    throw std::out_of_range("dual site (" + std::to_string(d.i) + "," + std::to_string(d.j) + ") outside dual box");
  }
  return (d.j + half_width_ + 1) * dual_side() + (d.i + half_width_ + 1);
}

DualSite BoxGeometry::dual_site_at(int index) const {
  return DualSite{index % dual_side() - half_width_ - 1, index / dual_side() - half_width_ - 1};
}

bool BoxGeometry::is_interior_face(DualSite d) const {
  return d.i >= -half_width_ && d.i < half_width_ && d.j >= -half_width_ && d.j < half_width_;
}

std::array<int, 2> BoxGeometry::dual_endpoints(int edge) const {
  const Edge& e = edges_[static_cast<std::size_t>(edge)];
  const Site o = e.origin;
  if (e.dir == Direction::kRight) {
    return {dual_index({o.x, o.y - 1}), dual_index({o.x, o.y})};
  }
  return {dual_index({o.x - 1, o.y}), dual_index({o.x, o.y})};
}

Segment BoxGeometry::edge_segment(int edge) const {
  const Edge& e = edges_[static_cast<std::size_t>(edge)];
  const int ax = 2 * e.origin.x;
  const int ay = 2 * e.origin.y;
  if (e.dir == Direction::kRight) return Segment{ax, ay, ax + 2, ay};
  return Segment{ax, ay, ax, ay + 2};
}

Segment BoxGeometry::dual_segment(int edge) const {
  const auto [a, b] = dual_endpoints(edge);
  const DualSite da = dual_site_at(a);
  const DualSite db = dual_site_at(b);
  return Segment{2 * da.i + 1, 2 * da.j + 1, 2 * db.i + 1, 2 * db.j + 1};
}

std::array<int, 4> BoxGeometry::face_edges(DualSite face) const {
  if (!is_interior_face(face)) throw std::out_of_range("not an interior face of the box");
  return {right_edge({face.i, face.j}), up_edge({face.i + 1, face.j}), right_edge({face.i, face.j + 1}),
          up_edge({face.i, face.j})};
}

std::array<Site, 4> BoxGeometry::face_corners(DualSite face) const {
  return {Site{face.i, face.j}, Site{face.i + 1, face.j}, Site{face.i + 1, face.j + 1}, Site{face.i, face.j + 1}};
}

std::vector<DualSite> even_sublattice_faces(const BoxGeometry& g) {
  std::vector<DualSite> out;
  const int L = g.half_width();
  for (int j = -L; j < L; ++j) {
    for (int i = -L; i < L; ++i) {
      // Centre (i + 1/2) + (j + 1/2) = i + j + 1 is even iff i + j is odd.
      if (((i + j) & 1) != 0) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<std::array<int, 4>> even_sublattice_squares(const BoxGeometry& g) {
  std::vector<std::array<int, 4>> out;
  for (const DualSite f : even_sublattice_faces(g)) out.push_back(g.face_edges(f));
  return out;
}

}  // namespace eulerperc
