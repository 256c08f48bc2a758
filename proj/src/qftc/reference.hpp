#pragma once

#include <cstdint>
#include <vector>

#include "qftc/common.hpp"
#include "qftc/fixed_point.hpp"

namespace qftc {

// Independent classical oracles. Deliberately naive: everything here is
// direct summation / exact integer arithmetic, with no shared code paths
// with the circuit implementations under test.

// y_k = (1/sqrt N) sum_j e^{2 pi i j k / N} x_j by direct O(N^2) summation.
cvec dft_reference(const cvec& x);

struct OverlapValues {
  double plus;   // |<phi+|phi_k>|^2 = (y^2+1)/4 + y/2
  double minus;  // |<phi-|phi_k>|^2 = (y^2+1)/4 - y/2
  double theta;  // asin(sqrt((1+plus)/2)) in [0, pi/2]
};
OverlapValues expected_overlaps(double y);  // requires |y| < 1

// --- Exact fixed-point mirrors of the quantum arithmetic -------------------
// All operate on scaled ring integers (see FixedPointFormat).

// c +/- 2^-l * b (b a plain n-digit code), mod the ring of fmt_c.
std::uint64_t ref_add(std::uint64_t c_bits, const FixedPointFormat& fmt_c,
                      std::uint64_t b_bits, int n_b, int l, int sign);

// The amount a Draper multiply-adder injects for register operands a (m
// fraction digits) and b (n fraction digits), scaled by 2^scale_pow2: each
// set digit pair contributes round_half_up(2^scale_pow2 * 2^-i * 2^-j) in the
// target ring (exact whenever i+j-scale <= fmt_c.fraction_digits).
std::uint64_t ref_mul_amount(std::uint64_t a_bits, int m, std::uint64_t b_bits,
                             int n, int scale_pow2,
                             const FixedPointFormat& fmt_c);

// c +/- a*b via ref_mul_amount.
std::uint64_t ref_mul_add(std::uint64_t c_bits, const FixedPointFormat& fmt_c,
                          std::uint64_t a_bits, int m, std::uint64_t b_bits,
                          int n, int sign, int scale_pow2 = 0);

// The amount a constant multiply-adder injects: K is first encoded to
// k_digits fraction digits, then each set digit j of r (q fraction digits)
// contributes round_half_up(K~ * 2^-j * 2^scale_pow2) in the target ring.
std::uint64_t ref_const_mul_amount(double k, int k_digits,
                                   std::uint64_t r_bits, int q, int scale_pow2,
                                   const FixedPointFormat& fmt_c);

// alpha - beta (both plain, width digits) as a complemental code with
// `width` fraction digits: exact.
std::uint64_t ref_sub(std::uint64_t alpha, std::uint64_t beta, int width);

// --- Circulant references ---------------------------------------------------

using cmat = std::vector<cvec>;  // row-major dense complex matrix

// Dense circulant with first row c: C[a][b] = c[(b - a) mod N]. Built without
// any Fourier machinery.
cmat circulant_dense(const cvec& c);

// F diag(e^{-i Lambda_k t}) F^dagger with Lambda_k = sqrt(N) * dft_reference(c)_k.
// Requires a Hermitian circulant (real spectrum).
cmat expm_circulant(const cvec& c, double t);

cvec matvec(const cmat& m, const cvec& v);

}  // namespace qftc
