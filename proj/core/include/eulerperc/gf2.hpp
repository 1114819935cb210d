#pragma once

#include <optional>
#include <vector>

#include "eulerperc/bitvector.hpp"

namespace eulerperc {

/// Affine solution set {particular + span(kernel)} of a GF(2) system.
struct Gf2Solution {
  BitVector particular;
  std::vector<BitVector> kernel;
};

/// Solves rows[i] . x = rhs[i] over GF(2) for x in GF(2)^num_vars by Gaussian
/// elimination. Returns std::nullopt when the system is inconsistent.
std::optional<Gf2Solution> solve_gf2(std::vector<BitVector> rows, std::vector<std::uint8_t> rhs, std::size_t num_vars);

/// Rank of a set of GF(2) vectors.
std::size_t gf2_rank(std::vector<BitVector> rows);

}  // namespace eulerperc
