#include "eulerperc/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace eulerperc {

std::optional<Gf2Solution> solve_gf2(std::vector<BitVector> rows, std::vector<std::uint8_t> rhs, std::size_t num_vars) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("GF(2) system: rows and right-hand side differ in length");
  for (const auto& r : rows)
    if (r.size() != num_vars) throw std::invalid_argument("GF(2) system: row length differs from variable count");

  std::vector<std::size_t> pivot_col;  // pivot column of reduced row k
  std::size_t rank = 0;
  for (std::size_t col = 0; col < num_vars && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].test(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    std::swap(rhs[sel], rhs[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(col)) {
        rows[r] ^= rows[rank];
        rhs[r] ^= rhs[rank];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rhs[r] != 0) return std::nullopt;

  std::vector<bool> is_pivot(num_vars, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  Gf2Solution sol{BitVector(num_vars), {}};
  for (std::size_t k = 0; k < rank; ++k)
    if (rhs[k] != 0) sol.particular.set(pivot_col[k]);
  for (std::size_t f = 0; f < num_vars; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(num_vars);
    v.set(f);
    for (std::size_t k = 0; k < rank; ++k)
      if (rows[k].test(f)) v.set(pivot_col[k]);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::size_t gf2_rank(std::vector<BitVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::vector<std::uint8_t> rhs(rows.size(), 0);
  const auto sol = solve_gf2(std::move(rows), std::move(rhs), n);
  return n - sol->kernel.size();
}

}  // namespace eulerperc
