#include "qftc/reference.hpp"

#include <cmath>

namespace qftc {

cvec dft_reference(const cvec& x) {
  const std::size_t n = x.size();
  cvec y(n, cplx(0.0, 0.0));
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = 2.0 * kPi * static_cast<double>(j * k % n) /
                         static_cast<double>(n);
      acc += x[j] * cplx(std::cos(ang), std::sin(ang));
    }
    y[k] = acc * inv_sqrt_n;
  }
  return y;
}

OverlapValues expected_overlaps(double y) {
  if (!(std::abs(y) < 1.0)) fail("expected_overlaps: |y| must be < 1");
  OverlapValues o;
  o.plus = 0.25 * (y * y + 1.0) + 0.5 * y;
  o.minus = 0.25 * (y * y + 1.0) - 0.5 * y;
  o.theta = std::asin(std::sqrt((1.0 + o.plus) / 2.0));
  return o;
}

std::uint64_t ref_add(std::uint64_t c_bits, const FixedPointFormat& fmt_c,
                      std::uint64_t b_bits, int n_b, int l, int sign) {
  // 2^-l * b scaled into the c ring: digit i of b has weight 2^-(i+l), i.e.
  // ring weight 2^(fraction_digits - i - l). Must be integral.
  const std::uint64_t ring = fmt_c.ring();
  std::uint64_t amount = 0;
  for (int i = 1; i <= n_b; ++i) {
    if (!((b_bits >> (n_b - i)) & 1)) continue;
    const int pow = fmt_c.fraction_digits - i - l;
    if (pow < 0) fail("ref_add: 2^-l*b not representable in target format");
    amount = (amount + (std::uint64_t{1} << pow)) % ring;
  }
  const std::uint64_t signed_amount = sign >= 0 ? amount : ring - amount;
  return (c_bits + signed_amount) % ring;
}

std::uint64_t ref_mul_amount(std::uint64_t a_bits, int m, std::uint64_t b_bits,
                             int n, int scale_pow2,
                             const FixedPointFormat& fmt_c) {
  const std::uint64_t ring = fmt_c.ring();
  std::uint64_t amount = 0;
  for (int i = 1; i <= m; ++i) {
    if (!((a_bits >> (m - i)) & 1)) continue;
    for (int j = 1; j <= n; ++j) {
      if (!((b_bits >> (n - j)) & 1)) continue;
      const int pow = fmt_c.fraction_digits + scale_pow2 - i - j;
      std::uint64_t contrib;
      if (pow >= 0) {
        contrib = (std::uint64_t{1} << pow) % ring;
      } else {
        // Sub-ulp pair: round half up -> 1 ulp at pow == -1, else 0.
        contrib = (pow == -1) ? 1 : 0;
      }
      amount = (amount + contrib) % ring;
    }
  }
  return amount;
}

std::uint64_t ref_mul_add(std::uint64_t c_bits, const FixedPointFormat& fmt_c,
                          std::uint64_t a_bits, int m, std::uint64_t b_bits,
                          int n, int sign, int scale_pow2) {
  const std::uint64_t ring = fmt_c.ring();
  const std::uint64_t amount =
      ref_mul_amount(a_bits, m, b_bits, n, scale_pow2, fmt_c);
  const std::uint64_t signed_amount = sign >= 0 ? amount : ring - amount;
  return (c_bits + signed_amount) % ring;
}

std::uint64_t ref_const_mul_amount(double k, int k_digits,
                                   std::uint64_t r_bits, int q, int scale_pow2,
                                   const FixedPointFormat& fmt_c) {
  const std::uint64_t ring = fmt_c.ring();
  const double k_enc =
      std::floor(std::ldexp(k, k_digits) + 0.5) * std::ldexp(1.0, -k_digits);
  std::uint64_t amount = 0;
  for (int j = 1; j <= q; ++j) {
    if (!((r_bits >> (q - j)) & 1)) continue;
    const std::uint64_t contrib =
        ring_round_half_up(std::ldexp(k_enc, scale_pow2 - j), fmt_c);
    amount = (amount + contrib) % ring;
  }
  return amount;
}

std::uint64_t ref_sub(std::uint64_t alpha, std::uint64_t beta, int width) {
  const FixedPointFormat out = FixedPointFormat::complement(width);
  std::uint64_t c = ref_add(0, out, alpha, width, 0, +1);
  return ref_add(c, out, beta, width, 0, -1);
}

cmat circulant_dense(const cvec& c) {
  const std::size_t n = c.size();
  cmat m(n, cvec(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      m[a][b] = c[(b + n - a) % n];
    }
  }
  return m;
}

cmat expm_circulant(const cvec& c, double t) {
  const std::size_t n = c.size();
  const cvec fk = dft_reference(c);
  for (const auto& f : fk) {
    if (std::abs(f.imag()) > 1e-10) {
      fail("expm_circulant: non-Hermitian circulant (complex eigenvalue)");
    }
  }
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  cmat m(n, cvec(n, cplx(0.0, 0.0)));
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = sqrt_n * fk[k].real();
    const cplx ph(std::cos(-lambda * t), std::sin(-lambda * t));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const double ang = 2.0 * kPi *
                           static_cast<double>(((a + n - b) % n) * k % n) /
                           static_cast<double>(n);
        // F_{ak} conj(F_{bk}) = e^{2 pi i (a-b) k / N} / N
        m[a][b] += ph * cplx(std::cos(ang), std::sin(ang)) /
                   static_cast<double>(n);
      }
    }
  }
  return m;
}

cvec matvec(const cmat& m, const cvec& v) {
  cvec out(m.size(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

}  // namespace qftc
