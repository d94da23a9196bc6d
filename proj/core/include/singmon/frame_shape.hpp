#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace singmon {

// A frame shape is a finite product prod_m (1 - t^m)^{chi_m} with integer
// exponents of either sign, stored sparsely as m -> chi_m.  It is the common
// currency for Poincare series of graded rings, characteristic polynomials
// of monodromy, and characteristic polynomials of Coxeter elements.
class FrameShape {
public:
  using Map = std::map<std::int64_t, std::int64_t>;

  FrameShape() = default;
  explicit FrameShape(Map chi);
  FrameShape(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init);

  const Map& exponents() const noexcept { return chi_; }
  bool trivial() const noexcept { return chi_.empty(); }
  std::int64_t exponent_of(std::int64_t period) const;

  // Degree of the shape as a rational function: sum of m * chi_m.
  std::int64_t degree() const;
  // Least common multiple of the periods; 1 for the trivial shape.
  std::int64_t support_lcm() const;

  void add_factor(std::int64_t period, std::int64_t exponent);
  FrameShape inverse() const;

  FrameShape& operator*=(const FrameShape& rhs);
  friend FrameShape operator*(FrameShape a, const FrameShape& b) {
    a *= b;
    return a;
  }
  friend bool operator==(const FrameShape&, const FrameShape&) = default;

private:
  Map chi_;
};

// Saito dual at the given level: period m maps to level/m with negated
// exponent.  Requires every period to divide the level.  Applying it twice
// at the same level is the identity.
FrameShape saito_dual(const FrameShape& phi, std::int64_t level);
// Convenience overload using the lcm of the support as the level.
FrameShape saito_dual(const FrameShape& phi);

// k-th Newton sum of the shape, sum over periods m dividing k of m * chi_m.
// Equals the power sum of the roots (with multiplicity sign) when the shape
// is a polynomial.
std::int64_t newton_sum(const FrameShape& phi, std::int64_t k);

// Recover the shape from Newton sums given on every divisor of d, by
// Moebius inversion over the divisor lattice.  Throws NonIntegralExponent
// when the inversion does not land on integers.
FrameShape chi_from_newton_sums(const std::map<std::int64_t, std::int64_t>& lambda,
                                std::int64_t d);

// Text format: "2*3^2/1*6" means (1-t^2)(1-t^3)^2 / (1-t)(1-t^6); the
// trivial shape prints as "1^0".  parse accepts exactly this grammar.
FrameShape parse_frame_shape(std::string_view text);
std::string format_frame_shape(const FrameShape& phi);

}  // namespace singmon
