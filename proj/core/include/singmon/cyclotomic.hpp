#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include "singmon/frame_shape.hpp"
#include "singmon/int_poly.hpp"

namespace singmon {

// d-th cyclotomic polynomial, computed by exact division of t^d - 1 by the
// lower cyclotomics and cached.  Safe to call from several threads.
const IntPoly& cyclotomic_polynomial(std::int64_t d);

// Multiplicity e_d of each primitive d-th root of unity in the shape:
// e_d = sum over periods m with d | m of chi_m.  Only nonzero entries.
std::map<std::int64_t, std::int64_t> cyclotomic_multiplicities(const FrameShape& phi);

// Inverse of cyclotomic_multiplicities: chi_m = e_m - sum_{j >= 2} chi_{jm},
// solved from the largest period down.
FrameShape shape_from_cyclotomic_multiplicities(
    const std::map<std::int64_t, std::int64_t>& e);

// True when every root multiplicity is nonnegative.
bool is_polynomial_shape(const FrameShape& phi);

// Expand the shape into a polynomial by exact division of the numerator
// product by the denominator product.  Throws NotAPolynomial when some root
// has negative multiplicity (detected by a failed division).
IntPoly to_polynomial(const FrameShape& phi);

// Factor a product of cyclotomics back into a shape.  Throws
// NotCyclotomicProduct when p is zero, p(0) is not a unit, or a
// non-cyclotomic factor remains.
FrameShape factor_cyclotomic(const IntPoly& p);

// Coefficients 0..order of the shape expanded as a power series; negative
// exponents become geometric-progression divisions.
PowerSeries expand_series(const FrameShape& phi, std::size_t order);

// Power sum of the roots of the shape (as a polynomial) evaluated
// numerically: sum over d of e_d times the sum of k-th powers of the
// primitive d-th roots.  Throws NotAPolynomial when some e_d < 0.
std::complex<double> roots_power_sum_numeric(const FrameShape& phi, std::int64_t k);

}  // namespace singmon
