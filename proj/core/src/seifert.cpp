#include "singmon/seifert.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <sstream>

#include "singmon/cyclotomic.hpp"
#include "singmon/errors.hpp"

namespace singmon {

namespace {

[[noreturn]] void geometry_error(const std::string& what) { throw InvalidGeometry(what); }

// exp(2 pi i j k / alpha), computed from the reduced angle so powers of a
// root of unity do not accumulate rounding error.
std::complex<double> xi_pow(std::int64_t alpha, std::int64_t j, std::int64_t k) {
  std::int64_t r = (j % alpha) * (k % alpha) % alpha;
  if (r < 0) r += alpha;
  const double arg = 2.0 * std::numbers::pi * static_cast<double>(r) /
                     static_cast<double>(alpha);
  return {std::cos(arg), std::sin(arg)};
}

std::complex<double> cpow_int(std::complex<double> z, std::int64_t e) {
  if (e < 0) return 1.0 / cpow_int(z, -e);
  std::complex<double> acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  a %= m;
  if (a < 0) a += m;
  std::int64_t r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) return -1;  // not invertible
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

void check_hypersurface_weights(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                                std::int64_t d) {
  if (q1 < 1 || q2 < 1 || q3 < 1) geometry_error("weights must be positive");
  if (d < 2) geometry_error("degree must be at least 2");
  if (q1 >= d || q2 >= d || q3 >= d) geometry_error("weights must be less than the degree");
  if (gcd64(gcd64(q1, q2), q3) != 1) geometry_error("weights must have gcd 1");
}

}  // namespace

void WeightSystem::validate() const {
  if (weights.size() < 3) geometry_error("need at least 3 weights");
  if (degrees.size() + 2 != weights.size())
    geometry_error("need exactly two fewer degrees than weights");
  for (std::int64_t q : weights)
    if (q < 1) geometry_error("weights must be positive");
  for (std::int64_t d : degrees) {
    if (d < 2) geometry_error("degrees must be at least 2");
    for (std::int64_t q : weights)
      if (q >= d) geometry_error("weights must be less than every degree");
  }
}

WeightSystem brieskorn_weights(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 2 || b < 2 || c < 2) geometry_error("Brieskorn exponents must be at least 2");
  return WeightSystem{{b * c, a * c, a * b}, {a * b * c}};
}

FrameShape poincare_series(const WeightSystem& ws) {
  ws.validate();
  FrameShape p;
  for (std::int64_t d : ws.degrees) p.add_factor(d, 1);
  for (std::int64_t q : ws.weights) p.add_factor(q, -1);
  return p;
}

std::vector<std::int64_t> orbit_invariants(std::int64_t q1, std::int64_t q2,
                                           std::int64_t q3, std::int64_t d) {
  check_hypersurface_weights(q1, q2, q3, d);

  // Sort the weights by the reduced denominator of w_i = d/q_i so that the
  // row of the table is determined by how many v_i exceed 1.
  std::array<std::int64_t, 3> q{q1, q2, q3};
  std::sort(q.begin(), q.end(), [d](std::int64_t a, std::int64_t b) {
    return a / gcd64(d, a) < b / gcd64(d, b);
  });
  const std::array<std::int64_t, 3> v{q[0] / gcd64(d, q[0]), q[1] / gcd64(d, q[1]),
                                      q[2] / gcd64(d, q[2])};
  int row;
  if (v[2] == 1)
    row = 1;
  else if (v[1] == 1)
    row = 2;
  else if (v[0] == 1)
    row = 3;
  else
    row = 4;

  std::array<std::int64_t, 3> numerator;
  std::vector<std::int64_t> singletons;
  switch (row) {
    case 1:
      numerator = {d, d, d};
      break;
    case 2:
      numerator = {d - q[1], d - q[0], d};
      singletons = {q[2]};
      break;
    case 3:
      numerator = {d - q[1] - q[2], d - q[0], d - q[0]};
      singletons = {q[2], q[1]};
      break;
    default:
      numerator = {d - q[1] - q[2], d - q[0] - q[2], d - q[0] - q[1]};
      singletons = {q[2], q[1], q[0]};
      break;
  }

  std::vector<std::int64_t> alphas = singletons;
  const std::array<std::pair<std::int64_t, std::int64_t>, 3> pairs{
      std::pair{q[1], q[2]}, std::pair{q[0], q[2]}, std::pair{q[0], q[1]}};
  for (int col = 0; col < 3; ++col) {
    const auto [qa, qb] = pairs[col];
    const std::int64_t alpha = gcd64(qa, qb);
    if (alpha < 2) continue;  // generic orbits carry no invariant
    const std::int64_t l = lcm64(qa, qb);
    if (numerator[col] % l != 0 || numerator[col] < 0) {
      std::ostringstream msg;
      msg << "orbit_invariants: column (" << qa << "," << qb << ") count " << numerator[col]
          << "/" << l << " is not a nonnegative integer";
      geometry_error(msg.str());
    }
    alphas.insert(alphas.end(), static_cast<std::size_t>(numerator[col] / l), alpha);
  }
  std::sort(alphas.begin(), alphas.end());
  return alphas;
}

std::int64_t exponent(std::int64_t q1, std::int64_t q2, std::int64_t q3, std::int64_t d) {
  check_hypersurface_weights(q1, q2, q3, d);
  return d - q1 - q2 - q3;
}

std::int64_t genus(std::int64_t q1, std::int64_t q2, std::int64_t q3, std::int64_t d,
                   const std::vector<std::int64_t>& alphas) {
  check_hypersurface_weights(q1, q2, q3, d);
  const std::int64_t r = static_cast<std::int64_t>(alphas.size());
  const std::int64_t R = d - q1 - q2 - q3;
  Rational g(Integer(R) * d, Integer(q1) * q2 * q3);
  g += Rational(2 - r);
  for (std::int64_t alpha : alphas) g += Rational(1, alpha);
  g /= Rational(2);
  if (!is_integral(g) || g.numerator() < 0) {
    std::ostringstream msg;
    msg << "genus: relation gives " << g << ", not a nonnegative integer";
    geometry_error(msg.str());
  }
  return g.numerator().convert_to<std::int64_t>();
}

SeifertData seifert_completion(const std::vector<std::int64_t>& alphas, std::int64_t R,
                               std::int64_t g) {
  if (R == 0) throw ZeroExponent("seifert_completion: exponent must be nonzero");
  if (g < 0) geometry_error("seifert_completion: genus must be nonnegative");
  SeifertData data;
  data.genus = g;
  std::vector<std::int64_t> sorted = alphas;
  std::sort(sorted.begin(), sorted.end());
  Rational beta_sum(0), inv_sum(0);
  for (std::int64_t alpha : sorted) {
    if (alpha < 2) geometry_error("seifert_completion: alpha must be at least 2");
    const std::int64_t beta = inverse_mod(R, alpha);
    if (beta < 0) {
      std::ostringstream msg;
      msg << "seifert_completion: gcd(R, alpha) = gcd(" << R << ", " << alpha << ") > 1";
      throw NotCoprime(msg.str());
    }
    data.pairs.push_back({alpha, beta});
    beta_sum += Rational(beta, alpha);
    inv_sum += Rational(1, alpha);
  }
  const std::int64_t r = static_cast<std::int64_t>(sorted.size());
  data.virtual_degree = (Rational(2 - 2 * g - r) + inv_sum) / Rational(R);
  const Rational b = beta_sum - data.virtual_degree;
  if (!is_integral(b)) {
    std::ostringstream msg;
    msg << "seifert_completion: b = " << b << " is not an integer";
    geometry_error(msg.str());
  }
  data.b = b.numerator();
  return data;
}

PoincareBundle bundle(std::int64_t q1, std::int64_t q2, std::int64_t q3, std::int64_t d) {
  PoincareBundle out;
  out.alphas = orbit_invariants(q1, q2, q3, d);
  out.exponent = d - q1 - q2 - q3;
  out.genus = genus(q1, q2, q3, d, out.alphas);
  out.p = poincare_series(WeightSystem{{q1, q2, q3}, {d}});
  out.psi.add_factor(1, 2 - static_cast<std::int64_t>(out.alphas.size()));
  for (std::int64_t alpha : out.alphas) out.psi.add_factor(alpha, 1);
  out.phi = out.p * out.psi;
  out.phi_tilde = out.phi;
  out.phi_tilde.add_factor(1, -2 * out.genus);
  return out;
}

ResidueResult residue_exact(const FrameShape& phi, std::int64_t alpha,
                            std::int64_t root_index) {
  if (alpha < 2) throw std::invalid_argument("residue_exact: alpha must be at least 2");
  if (gcd64(((root_index % alpha) + alpha) % alpha, alpha) != 1)
    throw std::invalid_argument("residue_exact: root index not coprime to alpha");
  const auto e = cyclotomic_multiplicities(phi);
  const auto it = e.find(alpha);
  const std::int64_t mult = it == e.end() ? 0 : it->second;
  if (mult != -1) {
    std::ostringstream msg;
    msg << "residue_exact: primitive " << alpha << "-th roots have multiplicity " << mult
        << ", need a simple pole";
    throw NotSimplePole(msg.str());
  }
  ResidueResult out;
  out.xi = xi_pow(alpha, root_index, 1);
  std::complex<double> prod = 1.0;
  for (const auto& [m, chi] : phi.exponents()) {
    const std::complex<double> base =
        m % alpha == 0 ? -static_cast<double>(m) * xi_pow(alpha, root_index, m - 1)
                       : 1.0 - xi_pow(alpha, root_index, m);
    prod *= cpow_int(base, chi);
  }
  out.value = prod;
  return out;
}

Wagreich3Report wagreich3_check(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                                std::int64_t d, int xi_exponent_base) {
  check_hypersurface_weights(q1, q2, q3, d);
  Wagreich3Report report;
  report.exponent = d - q1 - q2 - q3;
  report.weights_coprime = gcd64(gcd64(q1, q2), q3) == 1;
  report.pair_gcds_divide = d % gcd64(q1, q2) == 0 && d % gcd64(q1, q3) == 0 &&
                            d % gcd64(q2, q3) == 0;
  const auto alphas = orbit_invariants(q1, q2, q3, d);
  try {
    report.genus = genus(q1, q2, q3, d, alphas);
    report.genus_integral = true;
  } catch (const InvalidGeometry&) {
    report.genus_integral = false;
  }

  const FrameShape p = poincare_series(WeightSystem{{q1, q2, q3}, {d}});
  const std::array<std::int64_t, 3> q{q1, q2, q3};
  const std::int64_t R = report.exponent;
  std::vector<std::int64_t> distinct = alphas;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::int64_t alpha : distinct) {
    ResidueCase rc;
    rc.alpha = alpha;
    if (R % alpha == 0) {
      std::ostringstream msg;
      msg << "wagreich3_check: alpha " << alpha << " divides the exponent " << R;
      throw NotCoprime(msg.str());
    }
    rc.residue = residue_exact(p, alpha).value;
    const std::complex<double> xi = xi_pow(alpha, 1, 1);

    std::vector<int> div, rest;
    for (int i = 0; i < 3; ++i) (q[i] % alpha == 0 ? div : rest).push_back(i);
    rc.weights_divisible = static_cast<int>(div.size());
    if (div.empty() || rest.empty()) {
      std::ostringstream msg;
      msg << "wagreich3_check: alpha " << alpha << " divides " << div.size()
          << " of the weights";
      throw CaseViolation(msg.str());
    }
    if (div.size() == 1) {
      rc.case_value = -xi * (1.0 - xi_pow(alpha, 1, d)) /
                      (static_cast<double>(q[div[0]]) *
                       (1.0 - xi_pow(alpha, 1, q[rest[0]])) *
                       (1.0 - xi_pow(alpha, 1, q[rest[1]])));
    } else {
      rc.case_value = -static_cast<double>(d) * xi /
                      (static_cast<double>(q[div[0]]) * static_cast<double>(q[div[1]]) *
                       (1.0 - xi_pow(alpha, 1, q[rest[0]])));
    }

    std::complex<double> sum = 0.0;
    for (std::int64_t aj : alphas) {
      if (aj % alpha != 0) continue;
      sum += xi_pow(alpha, 1, xi_exponent_base + R) /
             (static_cast<double>(aj) * (1.0 - xi_pow(alpha, 1, R)));
    }
    rc.stated_sum = sum;

    rc.residue_matches_case = std::abs(rc.residue - rc.case_value) <= kResidueTolerance;
    rc.stated_matches_case = std::abs(rc.stated_sum - rc.case_value) <= kResidueTolerance;
    report.residues.push_back(rc);
  }

  report.ok = report.weights_coprime && report.genus_integral && report.pair_gcds_divide;
  for (const auto& rc : report.residues) report.ok = report.ok && rc.residue_matches_case;
  return report;
}

}  // namespace singmon
