#include "eulerperc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eulerperc {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const IntPolynomial& p) {
  RatPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long long>(k));
  trim(out);
  return out;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly monic_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational rat_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Square-free part of p with the factor q^valuation removed.
RatPoly reduced(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("root counting needs a nonzero polynomial");
  RatPoly r = to_rational(p);
  r.erase(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(p.valuation()));
  const RatPoly g = monic_gcd(r, rat_derivative(r));
  return divmod(r, g).first;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p, rat_derivative(p)};
  while (!chain.back().empty()) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

int variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& s : chain) signs.push_back(sgn(rat_eval(s, x)));
  return variations(signs);
}

int variations_at_infinity(const std::vector<RatPoly>& chain) {
  std::vector<int> signs;
  for (const auto& s : chain) signs.push_back(sgn(s.back()));
  return variations(signs);
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (auto c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::valuation() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return coeffs_.empty() ? 0 : k;
}

Rational IntPolynomial::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Rational(*it);
  return acc;
}

double IntPolynomial::evaluate(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + it->convert_to<double>();
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude << '*';
    out << 'q';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");

  std::map<std::size_t, BigInt> terms;
  std::size_t pos = 0;
  auto fail = [&]() { throw std::invalid_argument("malformed polynomial text: " + std::string(text)); };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail();
    }
    first = false;
    BigInt coeff = 1;
    bool have_digits = false;
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      coeff = BigInt(s.substr(start, pos - start));
      have_digits = true;
    }
    std::size_t degree = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_digits) fail();
      ++pos;
      if (pos >= s.size() || s[pos] != 'q') fail();
    }
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t d0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d0) fail();
        degree = std::stoul(s.substr(d0, pos - d0));
      }
    } else if (!have_digits) {
      fail();
    }
    terms[degree] += sign * coeff;
  }
  std::vector<BigInt> v(terms.empty() ? 0 : terms.rbegin()->first + 1, BigInt(0));
  for (auto& [d, c] : terms) v[d] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial derivative(const IntPolynomial& p) {
  std::vector<BigInt> out;
  const auto& c = p.coefficients();
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * static_cast<long long>(k));
  return IntPolynomial(std::move(out));
}

int sign_at(const IntPolynomial& p, const Rational& q) { return sgn(p.evaluate(q)); }

std::size_t count_positive_roots(const IntPolynomial& p) {
  const RatPoly r = reduced(p);
  if (r.size() <= 1) return 0;
  const auto chain = sturm_chain(r);
  return static_cast<std::size_t>(variations_at(chain, Rational(0)) - variations_at_infinity(chain));
}

std::size_t count_roots_between(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("root counting needs a nonzero polynomial");
  if (!(a < b)) throw std::invalid_argument("root counting interval must satisfy a < b");
  if (sign_at(p, a) == 0 || sign_at(p, b) == 0) throw std::invalid_argument("polynomial vanishes at an interval end");
  RatPoly r = to_rational(p);
  const RatPoly g = monic_gcd(r, rat_derivative(r));
  r = divmod(r, g).first;
  if (r.size() <= 1) return 0;
  const auto chain = sturm_chain(r);
  return static_cast<std::size_t>(variations_at(chain, a) - variations_at(chain, b));
}

std::pair<Rational, Rational> bisect_root(const IntPolynomial& p, Rational lo, Rational hi, int iterations) {
  int slo = sign_at(p, lo);
  const int shi = sign_at(p, hi);
  if (slo == 0 || shi == 0 || slo == shi) throw std::invalid_argument("bisection needs a strict sign change");
  for (int k = 0; k < iterations; ++k) {
    Rational mid = (lo + hi) / 2;
    const int sm = sign_at(p, mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {lo, hi};
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace eulerperc
