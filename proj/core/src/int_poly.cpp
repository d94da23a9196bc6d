#include "singmon/int_poly.hpp"

#include <sstream>
#include <stdexcept>

#include "singmon/errors.hpp"

namespace singmon {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::one() { return IntPoly{1}; }

IntPoly IntPoly::monomial(std::size_t deg, Integer coeff) {
  if (coeff == 0) return IntPoly{};
  std::vector<Integer> c(deg + 1);
  c[deg] = std::move(coeff);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

const Integer& IntPoly::leading() const { return coeffs_.back(); }

std::int64_t IntPoly::valuation() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<std::int64_t>(k);
  return -1;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> IntPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + std::complex<double>(it->convert_to<double>(), 0.0);
  return acc;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  if (den.leading() != 1 && den.leading() != -1)
    throw std::invalid_argument("divmod: divisor leading coefficient must be a unit");
  if (num.degree() < den.degree()) return {IntPoly{}, num};
  std::vector<Integer> rem = num.coeffs_;
  std::vector<Integer> quo(num.coeffs_.size() - den.coeffs_.size() + 1);
  const auto dd = den.coeffs_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Integer q = rem[k + dd] / den.coeffs_[dd];
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < den.coeffs_.size(); ++j) rem[k + j] -= q * den.coeffs_[j];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  if (is_zero()) return IntPoly{};
  if (degree() < divisor.degree())
    throw RemainderNonzero("exact_div: divisor degree exceeds dividend degree");
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quo(coeffs_.size() - divisor.coeffs_.size() + 1);
  const auto dd = divisor.coeffs_.size() - 1;
  const Integer& lead = divisor.coeffs_[dd];
  for (std::size_t k = quo.size(); k-- > 0;) {
    if (rem[k + dd] % lead != 0)
      throw RemainderNonzero("exact_div: leading coefficient not divisible");
    Integer q = rem[k + dd] / lead;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw RemainderNonzero("exact_div: nonzero remainder");
  return IntPoly(std::move(quo));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

IntPoly determinant(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return IntPoly::one();

  // Bareiss: after step k every entry is divisible by the previous pivot.
  IntPoly prev = IntPoly::one();
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return IntPoly{};
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.exact_div(prev);
      }
      m[i][k] = IntPoly{};
    }
    prev = m[k][k];
  }
  IntPoly det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

PowerSeries PowerSeries::divide(const IntPoly& num, const IntPoly& den, std::size_t order) {
  if (den.is_zero() || (den.coeff(0) != 1 && den.coeff(0) != -1))
    throw std::invalid_argument("PowerSeries::divide: denominator constant term must be a unit");
  PowerSeries out(order);
  const Integer d0 = den.coeff(0);
  for (std::size_t k = 0; k <= order; ++k) {
    Integer acc = num.coeff(k);
    const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(
        den.degree() < 0 ? 0 : den.degree()));
    for (std::size_t j = 1; j <= top; ++j) acc -= den.coeff(j) * out.coeffs_[k - j];
    out.coeffs_[k] = acc / d0;
  }
  return out;
}

}  // namespace singmon
