#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "singmon/numbers.hpp"

namespace singmon {

// Dense univariate polynomial over the integers, coefficients ascending.
// The zero polynomial is the empty coefficient vector and has degree -1.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<std::int64_t> coeffs);

  static IntPoly one();
  // coeff * t^deg
  static IntPoly monomial(std::size_t deg, Integer coeff = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  // Zero beyond the degree.
  Integer coeff(std::size_t k) const;
  const Integer& leading() const;  // undefined on zero

  // Smallest k with a nonzero coefficient; -1 for the zero polynomial.
  std::int64_t valuation() const noexcept;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& scalar);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { a -= b; return a; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { a *= b; return a; }
  friend IntPoly operator*(IntPoly a, const Integer& s) { a *= s; return a; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  Integer eval(const Integer& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  // Long division; requires the divisor's leading coefficient to be a unit.
  static std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den);
  // Division known to be exact over the integers; throws RemainderNonzero if
  // any coefficient step or the final remainder says otherwise.
  IntPoly exact_div(const IntPoly& divisor) const;

  // Human-readable form for diagnostics, e.g. "1 - 2*t + t^2".
  std::string str() const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Exact determinant of a square polynomial matrix by fraction-free
// elimination; every division along the way is exact.
IntPoly determinant(std::vector<std::vector<IntPoly>> m);

// Truncated integer power series, coefficients 0..order.
class PowerSeries {
public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  static PowerSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer& at(std::size_t k) { return coeffs_.at(k); }
  const Integer& at(std::size_t k) const { return coeffs_.at(k); }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  // num/den mod t^(order+1); den must have unit constant term.
  static PowerSeries divide(const IntPoly& num, const IntPoly& den, std::size_t order);

private:
  std::vector<Integer> coeffs_;
};

}  // namespace singmon
