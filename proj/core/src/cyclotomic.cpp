#include "singmon/cyclotomic.hpp"

#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "singmon/errors.hpp"
#include "singmon/numbers.hpp"

namespace singmon {

const IntPoly& cyclotomic_polynomial(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
  static std::mutex mutex;
  static std::unordered_map<std::int64_t, IntPoly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(d); it != cache.end()) return it->second;

  // t^d - 1 divided by Phi_e for all proper divisors e of d.
  std::vector<Integer> c(d + 1);
  c[0] = -1;
  c[d] = 1;
  IntPoly phi(std::move(c));
  for (std::int64_t e : divisors(d)) {
    if (e == d) continue;
    auto it = cache.find(e);
    if (it == cache.end()) {
      // Fill the cache bottom-up so the recursion stays iterative.
      std::vector<Integer> ce(e + 1);
      ce[0] = -1;
      ce[e] = 1;
      IntPoly phie(std::move(ce));
      for (std::int64_t f : divisors(e)) {
        if (f == e) continue;
        phie = phie.exact_div(cache.at(f));
      }
      it = cache.emplace(e, std::move(phie)).first;
    }
    phi = phi.exact_div(it->second);
  }
  return cache.emplace(d, std::move(phi)).first->second;
}

std::map<std::int64_t, std::int64_t> cyclotomic_multiplicities(const FrameShape& phi) {
  std::map<std::int64_t, std::int64_t> e;
  for (const auto& [m, chi] : phi.exponents())
    for (std::int64_t d : divisors(m)) e[d] += chi;
  for (auto it = e.begin(); it != e.end();)
    it = it->second == 0 ? e.erase(it) : std::next(it);
  return e;
}

FrameShape shape_from_cyclotomic_multiplicities(
    const std::map<std::int64_t, std::int64_t>& e) {
  if (e.empty()) return FrameShape{};
  if (e.begin()->first < 1)
    throw std::invalid_argument("shape_from_cyclotomic_multiplicities: order must be positive");
  const std::int64_t top = e.rbegin()->first;
  std::vector<std::int64_t> chi(static_cast<std::size_t>(top) + 1, 0);
  for (std::int64_t m = top; m >= 1; --m) {
    auto it = e.find(m);
    std::int64_t acc = it == e.end() ? 0 : it->second;
    for (std::int64_t j = 2 * m; j <= top; j += m) acc -= chi[j];
    chi[m] = acc;
  }
  FrameShape::Map out;
  for (std::int64_t m = 1; m <= top; ++m)
    if (chi[m] != 0) out[m] = chi[m];
  return FrameShape(std::move(out));
}

bool is_polynomial_shape(const FrameShape& phi) {
  for (const auto& [d, e] : cyclotomic_multiplicities(phi))
    if (e < 0) return false;
  return true;
}

IntPoly to_polynomial(const FrameShape& phi) {
  IntPoly num = IntPoly::one(), den = IntPoly::one();
  for (const auto& [m, e] : phi.exponents()) {
    std::vector<Integer> c(m + 1);
    c[0] = 1;
    c[m] = -1;
    IntPoly factor(std::move(c));
    for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k) (e > 0 ? num : den) *= factor;
  }
  auto [quot, rem] = IntPoly::divmod(num, den);
  if (!rem.is_zero())
    throw NotAPolynomial("to_polynomial: " + format_frame_shape(phi) +
                         " has a denominator root surviving cancellation");
  return quot;
}

FrameShape factor_cyclotomic(const IntPoly& p) {
  if (p.is_zero()) throw NotCyclotomicProduct("factor_cyclotomic: zero polynomial");
  if (p.coeff(0) != 1 && p.coeff(0) != -1)
    throw NotCyclotomicProduct("factor_cyclotomic: constant term is not a unit");
  std::map<std::int64_t, std::int64_t> e;
  IntPoly work = p;
  for (std::int64_t d = 1; work.degree() > 0; ++d) {
    // phi(d) <= n forces d <= 6n + 30 well past any size this library meets,
    // so a nonconstant remainder at that point has a non-cyclotomic factor.
    if (d > 6 * work.degree() + 30)
      throw NotCyclotomicProduct("factor_cyclotomic: non-cyclotomic factor " + work.str());
    if (euler_phi(d) > work.degree()) continue;
    const IntPoly& phi_d = cyclotomic_polynomial(d);
    while (work.degree() >= phi_d.degree()) {
      auto [quot, rem] = IntPoly::divmod(work, phi_d);
      if (!rem.is_zero()) break;
      ++e[d];
      work = std::move(quot);
    }
  }
  if (work.coeff(0) != 1 && work.coeff(0) != -1)
    throw NotCyclotomicProduct("factor_cyclotomic: residual constant " + work.str());
  return shape_from_cyclotomic_multiplicities(e);
}

PowerSeries expand_series(const FrameShape& phi, std::size_t order) {
  PowerSeries s = PowerSeries::one(order);
  for (const auto& [m, chi] : phi.exponents()) {
    const auto period = static_cast<std::size_t>(m);
    for (std::int64_t rep = 0; rep < (chi > 0 ? chi : -chi); ++rep) {
      if (chi > 0) {
        // multiply by (1 - t^m)
        for (std::size_t k = order + 1; k-- > period;)
          s.at(k) -= s.at(k - period);
      } else {
        // divide by (1 - t^m): running prefix sums with stride m
        for (std::size_t k = period; k <= order; ++k) s.at(k) += s.at(k - period);
      }
    }
  }
  return s;
}

std::complex<double> roots_power_sum_numeric(const FrameShape& phi, std::int64_t k) {
  auto e = cyclotomic_multiplicities(phi);
  std::complex<double> sum = 0.0;
  for (const auto& [d, mult] : e) {
    if (mult < 0)
      throw NotAPolynomial("roots_power_sum_numeric: negative multiplicity at order " +
                           std::to_string(d));
    std::complex<double> inner = 0.0;
    for (std::int64_t j = 1; j <= d; ++j) {
      if (gcd64(j, d) != 1) continue;
      const double arg = 2.0 * std::numbers::pi * static_cast<double>(j) *
                         static_cast<double>(k) / static_cast<double>(d);
      inner += std::complex<double>(std::cos(arg), std::sin(arg));
    }
    sum += static_cast<double>(mult) * inner;
  }
  return sum;
}

}  // namespace singmon
