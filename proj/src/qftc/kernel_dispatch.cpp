#include <cstdlib>

#include "qftc/kernels.hpp"

namespace qftc {

namespace {

struct KernelChoice {
  Kernel2x2 fn;
  std::string name;
};

KernelChoice choose() {
  const char* env = std::getenv("QFTC_KERNEL");
  if (env != nullptr) {
    const std::string want(env);
    if (want == "scalar") return {kernel2x2_scalar, "scalar"};
    if (want == "avx2") {
      if (!cpu_has_avx2()) fail("QFTC_KERNEL=avx2 but CPU lacks AVX2");
      return {kernel2x2_avx2, "avx2"};
    }
    fail("QFTC_KERNEL must be 'scalar' or 'avx2', got '" + want + "'");
  }
  if (cpu_has_avx2()) return {kernel2x2_avx2, "avx2"};
  return {kernel2x2_scalar, "scalar"};
}

const KernelChoice& choice() {
  static const KernelChoice c = choose();
  return c;
}

}  // namespace

Kernel2x2 active_kernel() { return choice().fn; }

const std::string& active_kernel_name() { return choice().name; }

}  // namespace qftc
