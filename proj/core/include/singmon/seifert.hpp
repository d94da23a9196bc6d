#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "singmon/frame_shape.hpp"
#include "singmon/numbers.hpp"

namespace singmon {

// Weights q_1..q_n and degrees d_1..d_{n-2} of a quasihomogeneous (complete
// intersection) surface singularity; n = 3 is the hypersurface case.
struct WeightSystem {
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> degrees;

  // Throws InvalidGeometry unless all entries are positive, there are two
  // fewer degrees than weights, and every weight is below every degree's lcm
  // scale requirement (weights strictly below the relevant degree).
  void validate() const;
};

// Weight system of z1^a + z2^b + z3^c: weights (bc, ac, ab), degree abc.
WeightSystem brieskorn_weights(std::int64_t a, std::int64_t b, std::int64_t c);

// prod (1 - t^{d_i}) / prod (1 - t^{q_j}) as a shape.
FrameShape poincare_series(const WeightSystem& ws);

// Exceptional-orbit multiplicities alpha_1 <= ... <= alpha_r of the Seifert
// fibration, read off the weights by the Orlik-Wagreich table: each pair
// (q_a, q_b) with gcd >= 2 contributes gcd(q_a, q_b) with multiplicity
// numerator/lcm(q_a, q_b), and each weight with reduced denominator v > 1
// contributes itself once.  The numerators depend on how many of the reduced
// w_i = d/q_i are integers.
std::vector<std::int64_t> orbit_invariants(std::int64_t q1, std::int64_t q2,
                                           std::int64_t q3, std::int64_t d);

// Gorenstein exponent R = d - q1 - q2 - q3.
std::int64_t exponent(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                      std::int64_t d);

// Genus of the quotient curve, solved from
// 2g - 2 + r - sum 1/alpha_i = R d / (q1 q2 q3).
// Throws InvalidGeometry when that does not give a nonnegative integer.
std::int64_t genus(std::int64_t q1, std::int64_t q2, std::int64_t q3, std::int64_t d,
                   const std::vector<std::int64_t>& alphas);

struct SeifertPair {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
};

// Full orbit invariants {g; b; (alpha_1, beta_1), ..., (alpha_r, beta_r)}.
struct SeifertData {
  std::int64_t genus = 0;
  Integer b = 0;
  std::vector<SeifertPair> pairs;
  Rational virtual_degree;  // vdeg(L) = -b + sum beta_i/alpha_i
  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// Complete the alpha-list to Seifert pairs using the Gorenstein relations
// R beta_i = 1 mod alpha_i with 0 < beta_i < alpha_i, and
// R vdeg = 2 - 2g - r + sum 1/alpha_i; then b = sum beta_i/alpha_i - vdeg.
// Throws ZeroExponent for R = 0, NotCoprime when some gcd(R, alpha_i) > 1,
// InvalidGeometry when b fails to be an integer.
SeifertData seifert_completion(const std::vector<std::int64_t>& alphas,
                               std::int64_t R, std::int64_t g);

// The four series attached to a hypersurface weight system:
//   p        Poincare series of the coordinate algebra
//   psi      (1-t)^{2-r} prod (1-t^{alpha_i})
//   phi      p * psi (a polynomial shape)
//   phi_tilde  phi / (1-t)^{2g}
struct PoincareBundle {
  FrameShape p, psi, phi, phi_tilde;
  std::int64_t genus = 0;
  std::int64_t exponent = 0;
  std::vector<std::int64_t> alphas;
};

PoincareBundle bundle(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                      std::int64_t d);

struct ResidueResult {
  std::complex<double> xi;     // the pole: exp(2 pi i root_index / alpha)
  std::complex<double> value;  // residue of the shape there
};

// Residue of the shape at the primitive alpha-th root of unity
// exp(2 pi i root_index / alpha).  The shape must have a simple pole there
// (total multiplicity of the primitive alpha-th roots equal to -1), else
// NotSimplePole.  Factors with period divisible by alpha contribute their
// derivative -m xi^{m-1}; the rest are evaluated directly, so the value is
// a finite product and exact up to floating point rounding.
ResidueResult residue_exact(const FrameShape& phi, std::int64_t alpha,
                            std::int64_t root_index = 1);

// Structure conditions characterizing p_A = (1-t^d)/prod(1-t^{q_i}).
struct ResidueCase {
  std::int64_t alpha = 1;
  int weights_divisible = 0;        // how many q_i the alpha divides (1 or 2)
  std::complex<double> residue;     // residue_exact of the hypersurface p_A
  std::complex<double> case_value;  // closed form for this divisibility case
  std::complex<double> stated_sum;  // sum over alpha_j of xi^(base+R)/(alpha_j (1-xi^R))
  bool residue_matches_case = false;
  bool stated_matches_case = false;  // diagnostic; not part of ok
};

struct Wagreich3Report {
  bool weights_coprime = false;       // (a) gcd(q1,q2,q3) = 1
  bool genus_integral = false;        // (b) genus relation solves integrally
  std::int64_t genus = -1;
  std::vector<ResidueCase> residues;  // (c) one entry per distinct alpha
  bool pair_gcds_divide = false;      // (d) (q_i, q_j) | d for i != j
  std::int64_t exponent = 0;          // (e) R = d - q1 - q2 - q3
  bool ok = false;  // (a), (b), (d) and every residue_matches_case
};

inline constexpr double kResidueTolerance = 1e-9;

// The transcription of the residue identity being checked leaves the power
// of xi in the numerator ambiguous; xi_exponent_base selects xi^(base + R),
// with base = 1 reading the product of the two printed factors literally.
// The stated_matches_case flags report how that reading fares; ok never
// depends on them.
Wagreich3Report wagreich3_check(std::int64_t q1, std::int64_t q2, std::int64_t q3,
                                std::int64_t d, int xi_exponent_base = 1);

}  // namespace singmon
