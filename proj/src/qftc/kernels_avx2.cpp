#include <immintrin.h>

#include "qftc/kernels.hpp"

namespace qftc {

namespace {

// (cr + i ci) * x for two packed complex doubles x = [re0 im0 re1 im1].
__attribute__((target("avx2,fma"))) inline __m256d cmul_scalar(
    double cr, double ci, __m256d x) {
  const __m256d t1 = _mm256_mul_pd(_mm256_set1_pd(cr), x);
  const __m256d xs = _mm256_permute_pd(x, 0b0101);  // [im0 re0 im1 re1]
  const __m256d t2 = _mm256_mul_pd(_mm256_set1_pd(ci), xs);
  return _mm256_addsub_pd(t1, t2);
}

}  // namespace

__attribute__((target("avx2,fma"))) void kernel2x2_avx2(
    cplx* amp, std::size_t dim, std::size_t tbit, std::size_t cmask,
    std::size_t cval, const cplx u[4]) {
  // Vector path needs two adjacent i0 values per iteration with an identical
  // control verdict, i.e. tbit >= 2 and controls insensitive to bit 0.
  if (tbit < 2 || (cmask & 1) != 0) {
    kernel2x2_scalar(amp, dim, tbit, cmask, cval, u);
    return;
  }
  const double u00r = u[0].real(), u00i = u[0].imag();
  const double u01r = u[1].real(), u01i = u[1].imag();
  const double u10r = u[2].real(), u10i = u[2].imag();
  const double u11r = u[3].real(), u11i = u[3].imag();
  auto* d = reinterpret_cast<double*>(amp);
  for (std::size_t block = 0; block < dim; block += 2 * tbit) {
    for (std::size_t off = 0; off < tbit; off += 2) {
      const std::size_t i0 = block + off;
      if ((i0 & cmask) != cval) continue;
      const std::size_t i1 = i0 | tbit;
      const __m256d a0 = _mm256_loadu_pd(d + 2 * i0);
      const __m256d a1 = _mm256_loadu_pd(d + 2 * i1);
      const __m256d b0 = _mm256_add_pd(cmul_scalar(u00r, u00i, a0),
                                       cmul_scalar(u01r, u01i, a1));
      const __m256d b1 = _mm256_add_pd(cmul_scalar(u10r, u10i, a0),
                                       cmul_scalar(u11r, u11i, a1));
      _mm256_storeu_pd(d + 2 * i0, b0);
      _mm256_storeu_pd(d + 2 * i1, b1);
    }
  }
}

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace qftc
