#include "eulerperc/exact_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "eulerperc/gf2.hpp"

namespace eulerperc {

bool EventSpec::holds(const EdgeConfig& cfg) const {
  for (int e : open)
    if (!cfg.test(static_cast<std::size_t>(e))) return false;
  for (int e : closed)
    if (cfg.test(static_cast<std::size_t>(e))) return false;
  return true;
}

bool EventSpec::empty() const {
  return std::any_of(open.begin(), open.end(),
                     [&](int e) { return std::find(closed.begin(), closed.end(), e) != closed.end(); });
}

EventSpec EventSpec::operator&(const EventSpec& other) const {
  EventSpec out{name + "&" + other.name, open, closed};
  for (int e : other.open)
    if (std::find(out.open.begin(), out.open.end(), e) == out.open.end()) out.open.push_back(e);
  for (int e : other.closed)
    if (std::find(out.closed.begin(), out.closed.end(), e) == out.closed.end()) out.closed.push_back(e);
  return out;
}

std::vector<EdgeConfig> even_subgraph_basis(const FiniteGraph& g) {
  const auto m = static_cast<std::size_t>(g.num_edges());
  std::vector<BitVector> rows(static_cast<std::size_t>(g.num_vertices()), BitVector(m));
  for (std::size_t e = 0; e < m; ++e) {
    const auto [u, v] = g.edge(static_cast<int>(e));
    // A loop touches its vertex twice and never affects parity.
    if (u == v) continue;
    rows[static_cast<std::size_t>(u)].flip(e);
    rows[static_cast<std::size_t>(v)].flip(e);
  }
  std::vector<std::uint8_t> rhs(rows.size(), 0);
  auto sol = solve_gf2(std::move(rows), std::move(rhs), m);
  return std::move(sol->kernel);
}

void for_each_even_subgraph(const FiniteGraph& g, const std::function<void(const EdgeConfig&)>& visit) {
  const auto basis = even_subgraph_basis(g);
  if (basis.size() > static_cast<std::size_t>(kMaxGraphCycleRank)) {
    throw std::invalid_argument("cycle rank too large for exhaustive enumeration");
  }
  EdgeConfig cur(static_cast<std::size_t>(g.num_edges()));
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 0; i < total; ++i) {
    visit(cur);
    if (i + 1 < total) cur ^= basis[static_cast<std::size_t>(std::countr_zero(i + 1))];
  }
}

IntPolynomial event_poly(const FiniteGraph& g, const EventSpec& ev) {
  for (int e : ev.open)
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("event edge index out of range");
  for (int e : ev.closed)
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("event edge index out of range");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.num_edges()) + 1, 0);
  for_each_even_subgraph(g, [&](const EdgeConfig& cfg) {
    if (ev.holds(cfg)) ++counts[cfg.count()];
  });
  std::vector<BigInt> c;
  for (auto n : counts) c.emplace_back(n);
  return IntPolynomial(std::move(c));
}

IntPolynomial partition_poly(const FiniteGraph& g) { return event_poly(g, EventSpec::always()); }

IntPolynomial covariance_numerator(const FiniteGraph& g, const EventSpec& a, const EventSpec& b) {
  return event_poly(g, a & b) * partition_poly(g) - event_poly(g, a) * event_poly(g, b);
}

Rational event_probability(const FiniteGraph& g, const EventSpec& ev, const Rational& p) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie strictly between 0 and 1");
  const Rational q = p / (1 - p);
  return event_poly(g, ev).evaluate(q) / partition_poly(g).evaluate(q);
}

FiniteGraph build_figure_graph() {
  FiniteGraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex("E" + std::to_string(i));
  for (int i = 0; i < 4; ++i) g.add_vertex("F" + std::to_string(i));
  const int e0 = 0;
  const int f0 = 4;
  g.add_edge(e0, f0);
  for (int i = 1; i <= 3; ++i) {
    g.add_edge(e0, i);
    g.add_edge(i, 4 + i);
    g.add_edge(4 + i, f0);
  }
  return g;
}

int figure_indicator_edge(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("indicator index must be in 0..3");
  return i == 0 ? 0 : 3 * i - 1;
}

EventSpec figure_event(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("event index must be in 1..3");
  return {"C" + std::to_string(i), {figure_indicator_edge(0), figure_indicator_edge(i)}, {}};
}

EventSpec parse_event(const FiniteGraph& g, std::string_view text) {
  auto edge_of = [&](std::string_view spec) {
    const auto dash = spec.find('-');
    if (dash == std::string_view::npos) throw std::invalid_argument("edge must be written u-v");
    const std::string u(spec.substr(0, dash));
    const std::string v(spec.substr(dash + 1));
    if (g.find_vertex(u) < 0 || g.find_vertex(v) < 0) throw std::invalid_argument("unknown vertex in " + std::string(spec));
    const int e = g.find_edge(u, v);
    if (e < 0) throw std::invalid_argument("no edge " + std::string(spec));
    return e;
  };

  EventSpec out = EventSpec::always();
  bool first = true;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto amp = text.find('&', start);
    const std::string_view term = text.substr(start, amp == std::string_view::npos ? std::string_view::npos : amp - start);
    EventSpec ev;
    if (term == "true") {
      ev = EventSpec::always();
    } else if (term.starts_with("open:")) {
      ev = {std::string(term), {edge_of(term.substr(5))}, {}};
    } else if (term.starts_with("closed:")) {
      ev = {std::string(term), {}, {edge_of(term.substr(7))}};
    } else if (term.size() == 2 && term[0] == 'C' && term[1] >= '1' && term[1] <= '9') {
      const std::string k(1, term[1]);
      ev = {std::string(term), {edge_of("E0-F0"), edge_of("E" + k + "-F" + k)}, {}};
    } else {
      throw std::invalid_argument("unknown event term '" + std::string(term) + "'");
    }
    out = first ? ev : (out & ev);
    first = false;
    if (amp == std::string_view::npos) break;
    start = amp + 1;
  }
  return out;
}

}  // namespace eulerperc
