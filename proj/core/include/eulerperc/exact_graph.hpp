#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerperc/bitvector.hpp"
#include "eulerperc/graph.hpp"
#include "eulerperc/polynomial.hpp"

namespace eulerperc {

inline constexpr int kMaxGraphCycleRank = 30;

/// Cylinder event over edge configurations: every edge in `open` is open and
/// every edge in `closed` is closed. An event whose required sets overlap is
/// empty.
struct EventSpec {
  std::string name;
  std::vector<int> open;
  std::vector<int> closed;

  static EventSpec always() { return {"true", {}, {}}; }
  bool holds(const EdgeConfig& cfg) const;
  bool empty() const;
  /// Intersection: union of the required sets.
  EventSpec operator&(const EventSpec& other) const;
};

/// Basis of the cycle space (even subgraphs) over GF(2); its size is
/// |E| - |V| + #components.
std::vector<EdgeConfig> even_subgraph_basis(const FiniteGraph& g);

/// Calls `visit` once per even subgraph, in Gray-code order from the empty
/// one. Throws std::invalid_argument if the cycle rank exceeds
/// kMaxGraphCycleRank.
void for_each_even_subgraph(const FiniteGraph& g, const std::function<void(const EdgeConfig&)>& visit);

/// Sum over even subgraphs of q^{#open edges}.
IntPolynomial partition_poly(const FiniteGraph& g);
/// Same sum restricted to even subgraphs in the event.
IntPolynomial event_poly(const FiniteGraph& g, const EventSpec& ev);
/// event_poly(A and B) * Z - event_poly(A) * event_poly(B); its sign at q is
/// the sign of the covariance of the two indicators.
IntPolynomial covariance_numerator(const FiniteGraph& g, const EventSpec& a, const EventSpec& b);
/// event_poly / partition_poly at q = p / (1 - p).
Rational event_probability(const FiniteGraph& g, const EventSpec& ev, const Rational& p);

/// Vertices E0..E3, F0..F3; edge 0 is E0F0 and arm i (1..3) contributes
/// E0Ei, EiFi, FiF0 as edges 3i-2, 3i-1, 3i.
FiniteGraph build_figure_graph();
/// Edge whose state is X_i: E0F0 for i = 0, EiFi otherwise.
int figure_indicator_edge(int i);
/// C_i = {X_0 = X_i = 1}, i in 1..3.
EventSpec figure_event(int i);

/// Event text: terms joined by '&'. A term is "true", "open:u-v",
/// "closed:u-v" (vertex names) or "Ci", meaning E0-F0 and Ei-Fi both open.
/// Throws std::invalid_argument for unknown vertices, edges or terms.
EventSpec parse_event(const FiniteGraph& g, std::string_view text);

}  // namespace eulerperc
