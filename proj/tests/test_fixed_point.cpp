#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qftc/fixed_point.hpp"

using namespace qftc;

TEST_CASE("format widths and rings") {
  const auto p = FixedPointFormat::plain(3);
  CHECK(p.width() == 3);
  CHECK(p.ring() == 8);
  CHECK_FALSE(p.complemental);
  const auto c = FixedPointFormat::complement(3);
  CHECK(c.width() == 4);
  CHECK(c.ring() == 16);
  CHECK(c.integer_digits == 1);
}

TEST_CASE("decode/encode round-trips every code") {
  for (int digits = 1; digits <= 6; ++digits) {
    for (bool comp : {false, true}) {
      const auto f = comp ? FixedPointFormat::complement(digits)
                          : FixedPointFormat::plain(digits);
      for (std::uint64_t bits = 0; bits < f.ring(); ++bits) {
        const double v = decode_bits(bits, f);
        if (comp && bits == (std::uint64_t{1} << digits)) {
          CHECK(v == -1.0);  // the one code encode_fixed refuses to produce
          continue;
        }
        CHECK(encode_fixed(v, f).bits == bits);
      }
    }
  }
}

TEST_CASE("decode ranges") {
  const auto p = FixedPointFormat::plain(2);
  CHECK(decode_bits(0, p) == 0.0);
  CHECK(decode_bits(3, p) == 0.75);
  const auto c = FixedPointFormat::complement(2);
  CHECK(decode_bits(0b100, c) == -1.0);
  CHECK(decode_bits(0b111, c) == -0.25);
  CHECK(decode_bits(0b011, c) == 0.75);
}

TEST_CASE("encode rejects out-of-range values") {
  const auto p = FixedPointFormat::plain(2);
  CHECK_THROWS(encode_fixed(-0.2, p));
  CHECK_THROWS(encode_fixed(1.0, p));
  CHECK(encode_fixed(0.75, p).bits == 3);
  const auto c = FixedPointFormat::complement(2);
  CHECK_THROWS(encode_fixed(-1.0, c));
  CHECK_THROWS(encode_fixed(1.0, c));
  CHECK(encode_fixed(-0.99, c).bits == 0b100);  // nearest code is -1.0
}

TEST_CASE("encode ties round toward -inf") {
  const auto p = FixedPointFormat::plain(2);
  CHECK(encode_fixed(0.125, p).bits == 0);   // midpoint of 0 and 0.25
  CHECK(encode_fixed(0.375, p).bits == 1);   // midpoint of 0.25 and 0.5
  const auto c = FixedPointFormat::complement(2);
  CHECK(decode_bits(encode_fixed(-0.125, c).bits, c) == -0.25);
}

TEST_CASE("ring_round_half_up") {
  const auto p = FixedPointFormat::plain(2);
  CHECK(ring_round_half_up(0.125, p) == 1);   // 0.5 -> up
  CHECK(ring_round_half_up(0.374, p) == 1);
  CHECK(ring_round_half_up(-0.125, p) == 0);  // -0.5 -> up to 0
  CHECK(ring_round_half_up(1.25, p) == 1);    // wraps mod 1
  const auto c = FixedPointFormat::complement(2);
  CHECK(ring_round_half_up(-0.25, c) == 0b111);
  CHECK(ring_round_half_up(2.25, c) == 1);    // wraps mod 2
}

TEST_CASE("digit strings") {
  CHECK(FixedPointCode{FixedPointFormat::plain(2), 0b11}.digit_string() ==
        ".11");
  CHECK(FixedPointCode{FixedPointFormat::complement(3), 0b1110}
            .digit_string() == "1.110");
}

TEST_CASE("code value helper matches decode_bits") {
  const auto c = FixedPointFormat::complement(4);
  for (std::uint64_t bits = 0; bits < c.ring(); ++bits) {
    CHECK(FixedPointCode{c, bits}.value() == decode_bits(bits, c));
  }
}
