#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace singmon {

// Arbitrary precision integers and exact fractions.  Polynomial coefficients
// use Integer; everything that must stay exact through intermediate division
// (Newton sums with fractional weights, Seifert b, Perron vectors) uses
// Rational and is checked for integrality at the end.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<Integer>;

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

// Divisors of n in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    phi -= phi / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) phi -= phi / n;
  return phi;
}

// Moebius function; 0 when n has a squared prime factor.
inline int mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace singmon
