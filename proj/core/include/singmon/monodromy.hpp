#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "singmon/frame_shape.hpp"
#include "singmon/seifert.hpp"

namespace singmon {

// k-th power sum of the monodromy eigenvalues of the hypersurface with the
// given weights:
//   Lambda_k = prod_i (delta(k q_i mod d) d/q_i - 1),
// evaluated exactly; the product is always an integer for valid weights.
std::int64_t lambda_k(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                      std::int64_t d, std::int64_t k);

struct MonodromyResult {
  FrameShape charpoly;  // det(tI - c) as a shape, periods dividing d
  std::int64_t mu = 0;  // Milnor number, the degree of charpoly
  std::map<std::int64_t, std::int64_t> lambdas;  // Newton sums on divisors of d
};

// Characteristic polynomial of the monodromy from the Newton sums Lambda_k
// on the divisors of d, inverted over the divisor lattice.
MonodromyResult charpoly_hypersurface(std::int64_t q1, std::int64_t q2,
                                      std::int64_t q3, std::int64_t d);

// Same answer along an independent route: expand the generating function
//   T^{q1+q2+q3-d} prod (T^{d-q_i}-1) / prod (T^{q_i}-1)
// into monomials T^{m_i} by exact division, reduce the exponents mod d, and
// read off one multiplicity per divisor class.  Throws RemainderNonzero if
// the division is not exact and NonGaloisStable if two exponents with the
// same order mod d occur with different multiplicities.
MonodromyResult charpoly_oracle(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                                std::int64_t d);

// Characteristic polynomial of the p-fold suspension, from those of the
// singularity (phi) and of its hypersurface section (phi_prime):
//   prod_m (1-t^{lcm(m,p)})^{gcd(m,p) chi_m} / (1-t^m)^{chi_m}
//   * prod_k (1-t^{lcm(k,p)})^{gcd(k,p) chi'_k}.
FrameShape suspension(const FrameShape& phi, const FrameShape& phi_prime,
                      std::int64_t p);

struct DualityCheck {
  FrameShape lhs;     // Saito dual of phi_tilde at level d
  FrameShape rhs;     // monodromy characteristic polynomial, Newton-sum route
  FrameShape oracle;  // same via the exponent expansion
  bool ok = false;
};

// Checks that the dual of phi_A/(1-t)^{2g} at level d equals the
// characteristic polynomial of the monodromy, computed both ways.
DualityCheck theorem_hypersurface_verify(std::int64_t q1, std::int64_t q2,
                                         std::int64_t q3, std::int64_t d);

struct FlatDualityCheck {
  FrameShape phi_tilde;
  FrameShape lhs;  // dual of phi_tilde
  FrameShape rhs;  // flattened monodromy polynomial
  bool ok = false;
};

// phi_M / (1-t).
FrameShape flat_codimension2(const FrameShape& phi_m);
// phi_M (1-t^q)^p / ((1-t)^{p-1} (1-t^{lcm(p,q)})^{gcd(p,q)}).
FrameShape flat_suspension(const FrameShape& phi_m, std::int64_t p, std::int64_t q);

// Codimension-2 duality for an ICIS in C^4 whose first equation is the
// quadric z1 z4 + z2 z3: checks dual(phi_A (1-t^{d2}) / ((1-t)^{2g}(1-t^{d1})))
// against phi_M/(1-t).  The dual level defaults to the lcm of the support.
FlatDualityCheck theorem_quadric_verify(const FrameShape& phi_a, std::int64_t d1,
                                        std::int64_t d2, std::int64_t g,
                                        const FrameShape& phi_m,
                                        std::optional<std::int64_t> level = std::nullopt);

enum class SuspensionCase { A, B };

// Suspension/Brieskorn-Hamm duality in C^4.  Case A needs p, q >= 2 and
// q | d2; case B needs p = 2.  Both need d1/q, d2/p, d2/q integral.  Throws
// CaseViolation when the hypotheses fail.
FlatDualityCheck theorem_suspension_verify(const FrameShape& phi_a, std::int64_t d1,
                                           std::int64_t d2, std::int64_t g,
                                           std::int64_t p, std::int64_t q,
                                           const FrameShape& phi_m, SuspensionCase which,
                                           std::optional<std::int64_t> level = std::nullopt);

}  // namespace singmon
