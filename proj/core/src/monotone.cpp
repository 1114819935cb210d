#include "eulerperc/monotone.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerperc {

std::size_t MonotoneFunction::bit_of(std::span<const int> x) {
  std::size_t bit = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] == 0) bit |= std::size_t{1} << k;
  return bit;
}

bool is_monotone(const MonotoneFunction& f) {
  const std::size_t n = static_cast<std::size_t>(f.arity);
  std::vector<int> x(n);
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    for (std::size_t k = 0; k < n; ++k) x[k] = static_cast<int>((m >> k) & 1U);
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k] != 0) continue;
      const bool low = f(x);
      x[k] = 1;
      const bool high = f(x);
      x[k] = 0;
      if (low && !high) return false;
    }
  }
  return true;
}

std::vector<MonotoneFunction> enumerate_monotone(int n) {
  if (n < 0 || n > kMaxMonotoneArity) throw std::invalid_argument("arity must be between 0 and 4");
  std::vector<std::uint32_t> t{0, 1};
  std::uint32_t nbit = 1;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint32_t> s;
    for (auto a : t)
      for (auto b : t)
        if ((a & b) == a) s.push_back((a << nbit) + b);
    nbit *= 2;
    t = std::move(s);
  }
  std::vector<MonotoneFunction> out;
  out.reserve(t.size());
  for (auto num : t) out.push_back({n, num});
  return out;
}

IntPolynomial indicator_weight(int x0, int x1, int x2, int x3) {
  if ((x0 + x1 + x2 + x3) % 2 != 0) return {};
  return IntPolynomial::monomial(1, static_cast<std::size_t>(3 * (x1 + x2 + x3) + x0));
}

IntPolynomial integral_poly(const MonotoneFunction& f) {
  if (f.arity != 4) throw std::invalid_argument("integral polynomial needs a function of 4 inputs");
  IntPolynomial sum;
  for (int m = 0; m < 16; ++m) {
    const int x[4] = {m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1};
    if (f(x)) sum += indicator_weight(x[0], x[1], x[2], x[3]);
  }
  return sum;
}

IntPolynomial variation_poly(const MonotoneFunction& f) {
  const IntPolynomial z = integral_poly({4, 0xFFFFU});
  const IntPolynomial pf = integral_poly(f);
  return derivative(pf) * z - pf * derivative(z);
}

const std::vector<std::string>& reference_variation_set() {
  static const std::vector<std::string> kSet = [] {
    const char* raw[] = {
        "0",
        "12*q^3 + 18*q^5 + 10*q^9",
        "4*q^3 + 18*q^5 + 22*q^9 + 12*q^13",
        "4*q^3 + 4*q^9 + 12*q^13 + 12*q^15",
        "10*q^9 + 18*q^13 + 12*q^15",
        "8*q^3 - 2*q^9 + 6*q^13 + 12*q^15",
        "12*q^3 - 8*q^9 + 12*q^15",
        "18*q^5 + 28*q^9 + 18*q^13",
        "4*q^3 + 12*q^5 + 16*q^9 + 12*q^13 + 4*q^15",
        "12*q^5 + 22*q^9 + 18*q^13 + 4*q^15",
        "12*q^3 + 12*q^5 + 4*q^9 + 4*q^15",
        "8*q^3 + 12*q^5 + 10*q^9 + 6*q^13 + 4*q^15",
        "8*q^3 + 18*q^5 + 16*q^9 + 6*q^13",
        "4*q^3 + 6*q^5 + 10*q^9 + 12*q^13 + 8*q^15",
        "6*q^5 + 16*q^9 + 18*q^13 + 8*q^15",
        "12*q^3 + 6*q^5 - 2*q^9 + 8*q^15",
        "8*q^3 + 6*q^5 + 4*q^9 + 6*q^13 + 8*q^15",
    };
    std::vector<std::string> v;
    for (const char* s : raw) v.push_back(IntPolynomial::parse(s).to_string());
    std::sort(v.begin(), v.end());
    return v;
  }();
  return kSet;
}

CertificationReport certify_monotonicity() {
  CertificationReport report;
  for (int n = 1; n <= kMaxMonotoneArity; ++n) report.counts_per_arity.push_back(enumerate_monotone(n).size());

  std::vector<std::pair<std::string, IntPolynomial>> seen;
  for (const auto& f : enumerate_monotone(4)) {
    ++report.functions_checked;
    IntPolynomial rf = variation_poly(f);
    const std::string key = rf.to_string();
    const bool fresh = std::none_of(seen.begin(), seen.end(), [&](const auto& s) { return s.first == key; });
    if (fresh) {
      seen.emplace_back(key, rf);
      const auto& c = rf.coefficients();
      if (std::any_of(c.begin(), c.end(), [](const BigInt& x) { return x < 0; })) {
        report.negative_coefficient_rf.emplace_back(rf, f.number);
      }
    }
    if (rf.is_zero()) continue;
    const std::size_t roots = count_positive_roots(rf);
    if (roots > 0) report.violations.push_back({f.number, rf, roots});
  }
  std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> keys;
  for (auto& [k, p] : seen) {
    keys.push_back(k);
    report.distinct_rf.push_back(p);
  }
  report.matches_reference = keys == reference_variation_set();
  return report;
}

}  // namespace eulerperc
