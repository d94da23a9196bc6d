#include "singmon/frame_shape.hpp"

#include <sstream>
#include <stdexcept>

#include "singmon/errors.hpp"
#include "singmon/numbers.hpp"

namespace singmon {

FrameShape::FrameShape(Map chi) : chi_(std::move(chi)) {
  for (auto it = chi_.begin(); it != chi_.end();) {
    if (it->first < 1) throw std::invalid_argument("FrameShape: period must be positive");
    it = it->second == 0 ? chi_.erase(it) : std::next(it);
  }
}

FrameShape::FrameShape(
    std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init)
    : FrameShape(Map(init)) {}

std::int64_t FrameShape::exponent_of(std::int64_t period) const {
  auto it = chi_.find(period);
  return it == chi_.end() ? 0 : it->second;
}

std::int64_t FrameShape::degree() const {
  std::int64_t deg = 0;
  for (const auto& [m, e] : chi_) deg += m * e;
  return deg;
}

std::int64_t FrameShape::support_lcm() const {
  std::int64_t l = 1;
  for (const auto& [m, e] : chi_) l = lcm64(l, m);
  return l;
}

void FrameShape::add_factor(std::int64_t period, std::int64_t exponent) {
  if (period < 1) throw std::invalid_argument("FrameShape: period must be positive");
  auto [it, inserted] = chi_.try_emplace(period, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) chi_.erase(it);
  } else if (exponent == 0) {
    chi_.erase(it);
  }
}

FrameShape FrameShape::inverse() const {
  FrameShape out = *this;
  for (auto& [m, e] : out.chi_) e = -e;
  return out;
}

FrameShape& FrameShape::operator*=(const FrameShape& rhs) {
  for (const auto& [m, e] : rhs.chi_) add_factor(m, e);
  return *this;
}

FrameShape saito_dual(const FrameShape& phi, std::int64_t level) {
  if (level < 1) throw std::invalid_argument("saito_dual: level must be positive");
  FrameShape::Map dual;
  for (const auto& [m, e] : phi.exponents()) {
    if (level % m != 0) {
      std::ostringstream msg;
      msg << "saito_dual: period " << m << " does not divide level " << level;
      throw NonDivisorPeriod(msg.str());
    }
    dual[level / m] = -e;
  }
  return FrameShape(std::move(dual));
}

FrameShape saito_dual(const FrameShape& phi) {
  return saito_dual(phi, phi.support_lcm());
}

std::int64_t newton_sum(const FrameShape& phi, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("newton_sum: k must be positive");
  std::int64_t sum = 0;
  for (const auto& [m, e] : phi.exponents())
    if (k % m == 0) sum += m * e;
  return sum;
}

FrameShape chi_from_newton_sums(const std::map<std::int64_t, std::int64_t>& lambda,
                                std::int64_t d) {
  if (d < 1) throw std::invalid_argument("chi_from_newton_sums: d must be positive");
  FrameShape::Map chi;
  for (std::int64_t m : divisors(d)) {
    std::int64_t acc = 0;
    for (std::int64_t j : divisors(m)) {
      auto it = lambda.find(j);
      if (it == lambda.end()) {
        std::ostringstream msg;
        msg << "chi_from_newton_sums: missing Newton sum for divisor " << j;
        throw std::invalid_argument(msg.str());
      }
      acc += mobius(m / j) * it->second;
    }
    if (acc % m != 0) {
      std::ostringstream msg;
      msg << "chi_from_newton_sums: inversion at period " << m << " gives " << acc << "/"
          << m;
      throw NonIntegralExponent(msg.str());
    }
    if (acc != 0) chi[m] = acc / m;
  }
  return FrameShape(std::move(chi));
}

namespace {

// shape := product ("/" product)?   product := factor ("*" factor)*
// factor := INT ("^" INT)?          INT := [1-9][0-9]*
class ShapeParser {
public:
  explicit ShapeParser(std::string_view text) : text_(text) {}

  FrameShape run() {
    FrameShape shape;
    product(shape, +1);
    if (!done() && peek() == '/') {
      ++pos_;
      product(shape, -1);
    }
    if (!done()) fail("unexpected character");
    return shape;
  }

private:
  void product(FrameShape& shape, int sign) {
    factor(shape, sign);
    while (!done() && peek() == '*') {
      ++pos_;
      factor(shape, sign);
    }
  }

  void factor(FrameShape& shape, int sign) {
    std::int64_t period = integer(false);
    std::int64_t exponent = 1;
    if (!done() && peek() == '^') {
      ++pos_;
      exponent = integer(true);
    }
    shape.add_factor(period, sign * exponent);
  }

  std::int64_t integer(bool zero_ok) {
    if (done() || peek() < '0' || peek() > '9') fail("expected integer");
    if (peek() == '0') {
      // A bare zero is only the trivial exponent, as in "1^0".
      ++pos_;
      if (!zero_ok) fail("leading zero");
      if (!done() && peek() >= '0' && peek() <= '9') fail("leading zero");
      return 0;
    }
    std::int64_t value = 0;
    while (!done() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + (peek() - '0');
      if (value > (std::int64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream msg;
    msg << "frame shape \"" << text_ << "\": " << why << " at position " << pos_;
    throw ParseError(msg.str());
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FrameShape parse_frame_shape(std::string_view text) { return ShapeParser(text).run(); }

std::string format_frame_shape(const FrameShape& phi) {
  if (phi.trivial()) return "1^0";
  std::ostringstream num, den;
  bool have_num = false, have_den = false;
  for (const auto& [m, e] : phi.exponents()) {
    std::ostringstream& out = e > 0 ? num : den;
    bool& have = e > 0 ? have_num : have_den;
    if (have) out << "*";
    out << m;
    std::int64_t mag = e > 0 ? e : -e;
    if (mag != 1) out << "^" << mag;
    have = true;
  }
  std::string result = have_num ? num.str() : "1^0";
  if (have_den) result += "/" + den.str();
  return result;
}

}  // namespace singmon
