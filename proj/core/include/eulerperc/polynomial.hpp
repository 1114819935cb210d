#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eulerperc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Coefficient k multiplies q^k; the leading coefficient is nonzero unless
/// the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coefficients);
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  /// Largest m with q^m dividing the polynomial; 0 for the zero polynomial.
  std::size_t valuation() const;

  Rational evaluate(const Rational& q) const;
  double evaluate(double q) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Canonical text: nonzero terms by increasing degree, e.g.
  /// "1 + 3*q^4 - q^8". Unit coefficients are omitted except on the
  /// constant term; the zero polynomial is "0".
  std::string to_string() const;
  /// Inverse of to_string. Also accepts explicit unit coefficients ("1*q^2"),
  /// repeated degrees and any term order. Throws std::invalid_argument.
  static IntPolynomial parse(std::string_view text);

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial derivative(const IntPolynomial& p);

/// -1, 0 or +1.
int sign_at(const IntPolynomial& p, const Rational& q);

/// Number of distinct real roots in (0, infinity), by a Sturm chain over the
/// rationals applied to the square-free part of p / q^valuation(p). A root at
/// q = 0 is never counted. Throws std::invalid_argument for the zero
/// polynomial.
std::size_t count_positive_roots(const IntPolynomial& p);

/// Distinct real roots in the open interval (a, b) by the same chain. Throws
/// std::invalid_argument if a >= b, if p vanishes at a or b, or if p is zero.
std::size_t count_roots_between(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Halves [lo, hi] `iterations` times keeping a strict sign change of p.
/// Throws std::invalid_argument unless p(lo) and p(hi) have opposite signs.
std::pair<Rational, Rational> bisect_root(const IntPolynomial& p, Rational lo, Rational hi, int iterations);

double to_double(const Rational& r);

}  // namespace eulerperc
