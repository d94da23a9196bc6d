#include "singmon/monodromy.hpp"

#include <array>
#include <sstream>

#include "singmon/cyclotomic.hpp"
#include "singmon/errors.hpp"
#include "singmon/int_poly.hpp"

namespace singmon {

std::int64_t lambda_k(std::int64_t q1, std::int64_t q2, std::int64_t q3, std::int64_t d,
                      std::int64_t k) {
  if (k < 1) throw std::invalid_argument("lambda_k: k must be positive");
  Rational prod(1);
  for (std::int64_t q : {q1, q2, q3}) {
    if (q < 1 || d < 1) throw InvalidGeometry("lambda_k: weights and degree must be positive");
    prod *= (k * q) % d == 0 ? Rational(d - q, q) : Rational(-1);
  }
  if (!is_integral(prod)) {
    std::ostringstream msg;
    msg << "lambda_k: k = " << k << " gives " << prod;
    throw NonIntegralExponent(msg.str());
  }
  return prod.numerator().convert_to<std::int64_t>();
}

MonodromyResult charpoly_hypersurface(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                                      std::int64_t d) {
  MonodromyResult out;
  for (std::int64_t k : divisors(d)) out.lambdas[k] = lambda_k(q1, q2, q3, d, k);
  out.charpoly = chi_from_newton_sums(out.lambdas, d);
  out.mu = out.lambdas.at(d);  // Lambda_d is the eigenvalue count
  return out;
}

MonodromyResult charpoly_oracle(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                                std::int64_t d) {
  const std::array<std::int64_t, 3> q{q1, q2, q3};
  for (std::int64_t qi : q)
    if (qi < 1 || qi >= d) throw InvalidGeometry("charpoly_oracle: need 1 <= q_i < d");

  IntPoly num = IntPoly::one(), den = IntPoly::one();
  for (std::int64_t qi : q) {
    std::vector<Integer> cn(static_cast<std::size_t>(d - qi) + 1), cd(qi + 1);
    cn[0] = -1;
    cn[d - qi] = 1;
    cd[0] = -1;
    cd[qi] = 1;
    num *= IntPoly(std::move(cn));
    den *= IntPoly(std::move(cd));
  }
  const IntPoly quot = num.exact_div(den);

  // Exponents of the monomial expansion, shifted by q1+q2+q3-d and reduced
  // mod d; all primitive roots of the same order must appear equally often.
  const std::int64_t shift = q1 + q2 + q3 - d;
  std::map<std::int64_t, Integer> count;
  MonodromyResult out;
  Integer mu = 0;
  for (std::size_t j = 0; j < quot.coeffs().size(); ++j) {
    const Integer& c = quot.coeffs()[j];
    if (c == 0) continue;
    if (c < 0)
      throw NonGaloisStable("charpoly_oracle: negative monomial multiplicity at degree " +
                            std::to_string(j));
    std::int64_t res = (static_cast<std::int64_t>(j) + shift) % d;
    if (res < 0) res += d;
    count[res] += c;
    mu += c;
  }
  std::map<std::int64_t, std::int64_t> orders;
  for (std::int64_t e : divisors(d)) {
    // Residues of order e mod d are those with gcd(res, d) = d/e.
    const std::int64_t g = d / e;
    std::optional<Integer> common;
    for (std::int64_t res = g % d; res < d; res += g) {
      if (gcd64(res == 0 ? d : res, d) != g) continue;
      auto it = count.find(res);
      const Integer c = it == count.end() ? Integer(0) : it->second;
      if (!common)
        common = c;
      else if (*common != c) {
        std::ostringstream msg;
        msg << "charpoly_oracle: primitive order-" << e << " exponents occur " << *common
            << " and " << c << " times";
        throw NonGaloisStable(msg.str());
      }
      if (res == 0) break;  // order 1 has the single residue 0
    }
    if (common && *common != 0) orders[e] = common->convert_to<std::int64_t>();
  }
  out.charpoly = shape_from_cyclotomic_multiplicities(orders);
  out.mu = mu.convert_to<std::int64_t>();
  for (std::int64_t k : divisors(d)) out.lambdas[k] = newton_sum(out.charpoly, k);
  return out;
}

FrameShape suspension(const FrameShape& phi, const FrameShape& phi_prime, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("suspension: p must be positive");
  FrameShape out;
  for (const auto& [m, chi] : phi.exponents()) {
    out.add_factor(lcm64(m, p), gcd64(m, p) * chi);
    out.add_factor(m, -chi);
  }
  for (const auto& [k, chi] : phi_prime.exponents())
    out.add_factor(lcm64(k, p), gcd64(k, p) * chi);
  return out;
}

DualityCheck theorem_hypersurface_verify(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                                         std::int64_t d) {
  DualityCheck check;
  check.lhs = saito_dual(bundle(q1, q2, q3, d).phi_tilde, d);
  check.rhs = charpoly_hypersurface(q1, q2, q3, d).charpoly;
  check.oracle = charpoly_oracle(q1, q2, q3, d).charpoly;
  check.ok = check.lhs == check.rhs && check.rhs == check.oracle;
  return check;
}

FrameShape flat_codimension2(const FrameShape& phi_m) {
  FrameShape out = phi_m;
  out.add_factor(1, -1);
  return out;
}

FrameShape flat_suspension(const FrameShape& phi_m, std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2)
    throw std::invalid_argument("flat_suspension: p and q must be at least 2");
  FrameShape out = phi_m;
  out.add_factor(q, p);
  out.add_factor(1, -(p - 1));
  out.add_factor(lcm64(p, q), -gcd64(p, q));
  return out;
}

FlatDualityCheck theorem_quadric_verify(const FrameShape& phi_a, std::int64_t d1,
                                        std::int64_t d2, std::int64_t g,
                                        const FrameShape& phi_m,
                                        std::optional<std::int64_t> level) {
  FlatDualityCheck check;
  check.phi_tilde = phi_a;
  check.phi_tilde.add_factor(d2, 1);
  check.phi_tilde.add_factor(1, -2 * g);
  check.phi_tilde.add_factor(d1, -1);
  check.lhs = level ? saito_dual(check.phi_tilde, *level) : saito_dual(check.phi_tilde);
  check.rhs = flat_codimension2(phi_m);
  check.ok = check.lhs == check.rhs;
  return check;
}

FlatDualityCheck theorem_suspension_verify(const FrameShape& phi_a, std::int64_t d1,
                                           std::int64_t d2, std::int64_t g, std::int64_t p,
                                           std::int64_t q, const FrameShape& phi_m,
                                           SuspensionCase which,
                                           std::optional<std::int64_t> level) {
  if (p < 2 || q < 2) throw CaseViolation("suspension duality: p and q must be at least 2");
  if (which == SuspensionCase::A && d2 % q != 0)
    throw CaseViolation("suspension duality case A: q must divide d2");
  if (which == SuspensionCase::B && p != 2)
    throw CaseViolation("suspension duality case B: p must equal 2");
  if (d1 % q != 0 || d2 % p != 0 || d2 % q != 0)
    throw CaseViolation("suspension duality: d1/q, d2/p, d2/q must be integral");

  FlatDualityCheck check;
  check.phi_tilde = phi_a;
  check.phi_tilde.add_factor(d2, p - 1);
  check.phi_tilde.add_factor(d1 / q, 1);
  check.phi_tilde.add_factor(d2 / p, 1);
  check.phi_tilde.add_factor(1, -2 * g);
  check.phi_tilde.add_factor(d1, -1);
  check.phi_tilde.add_factor(d2 / q, -p);
  check.lhs = level ? saito_dual(check.phi_tilde, *level) : saito_dual(check.phi_tilde);
  check.rhs = flat_suspension(phi_m, p, q);
  check.ok = check.lhs == check.rhs;
  return check;
}

}  // namespace singmon
