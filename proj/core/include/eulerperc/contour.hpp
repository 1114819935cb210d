#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eulerperc/bitvector.hpp"
#include "eulerperc/ising.hpp"
#include "eulerperc/lattice.hpp"

namespace eulerperc {

/// True iff every listed site has an even number of open incident edges.
bool is_even(const BoxGeometry& g, const EdgeConfig& cfg, std::span<const int> sites);
/// Evenness at every site of the box (edges outside the box count as closed).
bool is_even(const BoxGeometry& g, const EdgeConfig& cfg);

/// Open-degree parity of every site, indexed by site.
std::vector<std::uint8_t> degree_parities(const BoxGeometry& g, const EdgeConfig& cfg);

/// Contour map: primal edge e is open iff the two dual spins across it differ.
EdgeConfig contours(const BoxGeometry& g, const SpinConfig& spins);
/// Same map for any spin graph: edge k is open iff its endpoints differ.
EdgeConfig contours(const SpinGraph& graph, const SpinConfig& spins);

/// The coloring c of the dual box with contours(c) = cfg and c(root) =
/// root_value. The root is BoxGeometry::root_dual_index(). Throws
/// std::invalid_argument when cfg is not even, since the coloring would then
/// depend on the path used to reach a site.
SpinConfig coloring_of(const BoxGeometry& g, const EdgeConfig& cfg, std::int8_t root_value);

/// Dual sites carrying spin +1 alongside a path of contour edges: for each
/// path edge, the dual endpoint with spin +1. Consecutive entries are equal
/// or star-neighbours, and a turn through a saddle produces the diagonal step.
/// Throws std::invalid_argument unless the path is a self-avoiding sequence
/// of adjacent edges that are all open in contours(spins).
std::vector<int> star_chain_from_path(const BoxGeometry& g, const SpinConfig& spins, std::span<const int> path);

/// ASCII picture: rows of sites 'o' joined by '-' (open horizontal edge) with
/// rows of '|' (open vertical edge) in between; top row first.
std::string edges_to_ascii(const BoxGeometry& g, const EdgeConfig& cfg);

}  // namespace eulerperc
