#pragma once

#include <cstddef>
#include <string>

#include "qftc/common.hpp"

namespace qftc {

// Inner loop of dense 2x2 gate application. For every basis index i with
// (i & tbit) == 0 and (i & cmask) == cval, the pair (amp[i], amp[i | tbit])
// is replaced by U * (amp[i], amp[i | tbit]). tbit is the single target bit;
// cmask/cval encode the control condition (tbit excluded from cmask).
using Kernel2x2 = void (*)(cplx* amp, std::size_t dim, std::size_t tbit,
                           std::size_t cmask, std::size_t cval,
                           const cplx u[4]);

void kernel2x2_scalar(cplx* amp, std::size_t dim, std::size_t tbit,
                      std::size_t cmask, std::size_t cval, const cplx u[4]);
void kernel2x2_avx2(cplx* amp, std::size_t dim, std::size_t tbit,
                    std::size_t cmask, std::size_t cval, const cplx u[4]);

bool cpu_has_avx2();

// Active kernel, chosen once: env QFTC_KERNEL=scalar|avx2 overrides the
// default of avx2-when-supported. Unknown values or avx2 on a non-AVX2 CPU
// raise an error.
Kernel2x2 active_kernel();
const std::string& active_kernel_name();

}  // namespace qftc
