#pragma once

#include <cstdint>
#include <string>

#include "qftc/common.hpp"

namespace qftc {

// Fixed-point formats. Two kinds are used throughout:
//  - plain:        0.c1 c2 ... cp         value in [0, 1)
//  - complemental: c0.c1 c2 ... cp        value = -c0 + sum c_i 2^-i in [-1, 1)
// Both are ring codes: the scaled integers live mod 2^width, so plain
// arithmetic wraps mod 1 and complemental arithmetic wraps mod 2 (the usual
// two's-complement behavior on the scaled integers).
struct FixedPointFormat {
  int integer_digits = 0;  // 0 (plain) or 1 (complemental c0)
  int fraction_digits = 1;
  bool complemental = false;

  int width() const { return integer_digits + fraction_digits; }
  std::uint64_t ring() const { return std::uint64_t{1} << width(); }

  static FixedPointFormat plain(int p) { return {0, p, false}; }
  static FixedPointFormat complement(int p) { return {1, p, true}; }

  bool operator==(const FixedPointFormat&) const = default;
};

struct FixedPointCode {
  FixedPointFormat format;
  std::uint64_t bits = 0;  // scaled integer in [0, 2^width), MSB-first digits

  double value() const;
  // MSB-first digit string, e.g. "1.110" (complemental) or ".11" (plain).
  std::string digit_string() const;

  bool operator==(const FixedPointCode&) const = default;
};

// Decode a raw scaled integer under a format.
double decode_bits(std::uint64_t bits, const FixedPointFormat& f);

// Nearest-code rounding with ties toward -inf. Throws on out-of-range input
// (plain: [0, 1 - 2^-p]; complemental: (-1, 1 - 2^-p], the value -1.0 itself
// is rejected even though code 1.00..0 decodes to it).
FixedPointCode encode_fixed(double x, const FixedPointFormat& f);

// Ring integer nearest to x * 2^fraction_digits, half rounded up, reduced
// mod 2^width. Used by arithmetic circuits for constant/addend encoding.
std::uint64_t ring_round_half_up(double x, const FixedPointFormat& f);

}  // namespace qftc
