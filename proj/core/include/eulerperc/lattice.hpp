#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace eulerperc {

/// Primal lattice site (x, y) in Z^2.
struct Site {
  int x = 0;
  int y = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Dual lattice site with center (i + 1/2, j + 1/2).
struct DualSite {
  int i = 0;
  int j = 0;
  friend bool operator==(const DualSite&, const DualSite&) = default;
};

enum class Direction : std::uint8_t { kRight, kUp };

/// Nearest-neighbour primal edge. `from` is the origin site index; `to` is the
/// index of origin + (1,0) or origin + (0,1).
struct Edge {
  int from = 0;
  int to = 0;
  Site origin;
  Direction dir = Direction::kRight;
};

/// Straight segment in doubled coordinates (units of 1/2), so primal and dual
/// endpoints are both integral.
struct Segment {
  int ax = 0, ay = 0, bx = 0, by = 0;
};

/// True iff both segments join the same unordered pair of points.
bool same_segment(const Segment& a, const Segment& b);

/// The unique unit segment of the other lattice crossing `s` at its midpoint
/// (rotation by a quarter turn). Applying it twice gives back `s`.
Segment crossing_segment(const Segment& s);

struct SiteNeighborhood {
  Site site;
  std::vector<Site> neighbors;       // l1-distance 1, inside the box
  std::vector<Site> star_neighbors;  // l-infinity distance 1, inside the box
};

/// Closed box [-L, L]^2 of Z^2 together with its dual sites.
///
/// Edges are indexed row-major by (site, direction): sites are visited with y
/// outermost and x innermost, and each site contributes its right edge then
/// its up edge when these stay in the box.
///
/// The dual box is the (2L+2) x (2L+2) grid of dual sites with i, j in
/// [-L-1, L]: the (2L)^2 faces of the box plus the outer ring of dual sites
/// across the box boundary. Every box edge is crossed by exactly one dual edge
/// whose endpoints are both in the dual box. Ring sites carry boundary spins.
class BoxGeometry {
 public:
  /// Throws std::invalid_argument unless half_width >= 1.
  static BoxGeometry build(int half_width);

  int half_width() const { return half_width_; }
  int side_sites() const { return 2 * half_width_ + 1; }
  int num_sites() const { return side_sites() * side_sites(); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool contains(Site s) const;
  /// Throws std::out_of_range for sites outside the box.
  int site_index(Site s) const;
  Site site_at(int index) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  /// Edge index, or -1 when the edge leaves the box.
  int right_edge(Site s) const;
  int up_edge(Site s) const;

  /// Incident edge indices of a box site (2 at corners, 3 on sides, 4 inside).
  /// Throws std::out_of_range for sites outside the box.
  std::vector<int> incident_edges(Site s) const;

  SiteNeighborhood neighborhood(Site s) const;

  int dual_side() const { return 2 * half_width_ + 2; }
  int num_dual_sites() const { return dual_side() * dual_side(); }
  bool contains_dual(DualSite d) const;
  int dual_index(DualSite d) const;
  DualSite dual_site_at(int index) const;
  /// Faces of the box are interior; the remaining dual sites form the ring.
  bool is_interior_face(DualSite d) const;
  bool is_ring(DualSite d) const { return contains_dual(d) && !is_interior_face(d); }

  /// Dual site indices on the two sides of a primal edge: (below, above) for
  /// horizontal edges, (left, right) for vertical ones.
  std::array<int, 2> dual_endpoints(int edge) const;

  Segment edge_segment(int edge) const;
  Segment dual_segment(int edge) const;

  /// Edges of an interior face in cycle order bottom, right, top, left. Edge k
  /// joins corners k and k+1 (mod 4) where the corners are listed
  /// counter-clockwise from the lower-left one.
  std::array<int, 4> face_edges(DualSite face) const;
  std::array<Site, 4> face_corners(DualSite face) const;

  /// Dual site (0,0), centred at (1/2, 1/2): the default root for colorings.
  int root_dual_index() const { return dual_index({0, 0}); }

 private:
  explicit BoxGeometry(int half_width);

  int half_width_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> right_edge_;
  std::vector<int> up_edge_;
};

/// Faces x of the box whose centre has even coordinate sum (i + j odd in dual
/// indices), each as its four edges in face_edges order. The groups are
/// pairwise disjoint; their union is the box's inner edge set covered by the
/// even sublattice.
std::vector<std::array<int, 4>> even_sublattice_squares(const BoxGeometry& g);

/// Dual sites of the faces returned by even_sublattice_squares, same order.
std::vector<DualSite> even_sublattice_faces(const BoxGeometry& g);

}  // namespace eulerperc
