#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eulerperc/polynomial.hpp"

namespace eulerperc {

inline constexpr int kMaxMonotoneArity = 4;

/// Boolean function of `arity` inputs stored as a 2^arity-bit truth table.
/// Layout: the table splits in halves on the last input, the high half for
/// x_n = 0 and the low half for x_n = 1, recursively. Equivalently the value
/// at x sits at bit sum_k (1 - x_k) 2^k (inputs indexed from 0).
struct MonotoneFunction {
  int arity = 0;
  std::uint32_t number = 0;

  static std::size_t bit_of(std::span<const int> x);
  bool operator()(std::span<const int> x) const { return ((number >> bit_of(x)) & 1U) != 0; }
  friend bool operator==(const MonotoneFunction&, const MonotoneFunction&) = default;
};

/// Exhaustive test: no input raised from 0 to 1 lowers the output.
bool is_monotone(const MonotoneFunction& f);

/// All monotone functions of n inputs (0 <= n <= 4) built from pairs
/// (F(., 0), F(., 1)) with F(., 0) <= F(., 1). Order: for each lower half a
/// in the previous list, each upper half b with a <= b, in list order.
/// Throws std::invalid_argument outside 0..4.
std::vector<MonotoneFunction> enumerate_monotone(int n);

/// Weight of (X0, X1, X2, X3) on the figure graph: q^{3(X1+X2+X3)+X0} when
/// the sum is even, 0 otherwise.
IntPolynomial indicator_weight(int x0, int x1, int x2, int x3);

/// P_F: sum over the 16 tuples of F(tuple) * indicator_weight(tuple).
/// Throws std::invalid_argument unless F has arity 4.
IntPolynomial integral_poly(const MonotoneFunction& f);
/// R_F = P_F' Z - P_F Z' with Z = integral_poly(constant 1).
IntPolynomial variation_poly(const MonotoneFunction& f);

struct RootViolation {
  std::uint32_t number = 0;
  IntPolynomial rf;
  std::size_t positive_roots = 0;
};

struct CertificationReport {
  /// Entry n - 1: number of monotone functions of n inputs, n = 1..4.
  std::vector<std::size_t> counts_per_arity;
  std::size_t functions_checked = 0;
  /// Distinct R_F, sorted by canonical text.
  std::vector<IntPolynomial> distinct_rf;
  /// Members of distinct_rf with a negative coefficient, and one function
  /// producing each.
  std::vector<std::pair<IntPolynomial, std::uint32_t>> negative_coefficient_rf;
  std::vector<RootViolation> violations;
  bool matches_reference = false;

  bool certified() const { return violations.empty() && functions_checked == 168; }
};

/// The 17 distinct variation polynomials expected over all 168 functions
/// (zero included), as canonical text.
const std::vector<std::string>& reference_variation_set();

CertificationReport certify_monotonicity();

}  // namespace eulerperc
