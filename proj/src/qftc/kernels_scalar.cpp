#include "qftc/kernels.hpp"

namespace qftc {

void kernel2x2_scalar(cplx* amp, std::size_t dim, std::size_t tbit,
                      std::size_t cmask, std::size_t cval, const cplx u[4]) {
  const cplx u00 = u[0], u01 = u[1], u10 = u[2], u11 = u[3];
  for (std::size_t block = 0; block < dim; block += 2 * tbit) {
    for (std::size_t off = 0; off < tbit; ++off) {
      const std::size_t i0 = block + off;
      if ((i0 & cmask) != cval) continue;
      const cplx a0 = amp[i0];
      const cplx a1 = amp[i0 | tbit];
      amp[i0] = u00 * a0 + u01 * a1;
      amp[i0 | tbit] = u10 * a0 + u11 * a1;
    }
  }
}

}  // namespace qftc
