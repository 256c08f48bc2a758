#include "qftc/fixed_point.hpp"

#include <cmath>

namespace qftc {

double decode_bits(std::uint64_t bits, const FixedPointFormat& f) {
  const double scale = std::ldexp(1.0, -f.fraction_digits);
  if (f.complemental) {
    const std::uint64_t half = std::uint64_t{1} << f.fraction_digits;
    const double v = static_cast<double>(bits) * scale;
    return bits >= half ? v - 2.0 : v;
  }
  return static_cast<double>(bits) * scale;
}

double FixedPointCode::value() const { return decode_bits(bits, format); }

std::string FixedPointCode::digit_string() const {
  std::string s;
  if (format.complemental) {
    s += (bits >> format.fraction_digits) ? '1' : '0';
  }
  s += '.';
  for (int i = format.fraction_digits - 1; i >= 0; --i) {
    s += ((bits >> i) & 1) ? '1' : '0';
  }
  return s;
}

FixedPointCode encode_fixed(double x, const FixedPointFormat& f) {
  const double ulp = std::ldexp(1.0, -f.fraction_digits);
  const double hi = 1.0 - ulp;
  const double lo = f.complemental ? -1.0 : 0.0;
  const bool in_range =
      f.complemental ? (x > lo && x <= hi) : (x >= lo && x <= hi);
  if (!in_range) {
    fail("encode_fixed: value " + std::to_string(x) +
         " outside the representable range");
  }
  // Nearest, ties toward -inf.
  const double scaled = std::ldexp(x, f.fraction_digits);
  const auto k = static_cast<std::int64_t>(std::ceil(scaled - 0.5));
  const auto m = static_cast<std::int64_t>(f.ring());
  std::int64_t r = k % m;
  if (r < 0) r += m;
  return FixedPointCode{f, static_cast<std::uint64_t>(r)};
}

std::uint64_t ring_round_half_up(double x, const FixedPointFormat& f) {
  const double scaled = std::ldexp(x, f.fraction_digits);
  const auto k = static_cast<std::int64_t>(std::floor(scaled + 0.5));
  const auto m = static_cast<std::int64_t>(f.ring());
  std::int64_t r = k % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace qftc
