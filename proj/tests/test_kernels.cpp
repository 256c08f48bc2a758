#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qftc/kernels.hpp"

using namespace qftc;

namespace {

cvec random_state(Rng& rng, std::size_t dim) {
  cvec v(dim);
  double n2 = 0.0;
  for (auto& a : v) {
    a = cplx(rng.normal(), rng.normal());
    n2 += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(n2);
  return v;
}

std::array<cplx, 4> random_unitary2(Rng& rng) {
  // Haar-ish: two angles and a phase are plenty for equivalence testing.
  const double t = rng.uniform() * kPi;
  const double a = rng.uniform() * 2 * kPi;
  const double b = rng.uniform() * 2 * kPi;
  return {std::polar(std::cos(t), a), std::polar(std::sin(t), b),
          std::polar(-std::sin(t), -b), std::polar(std::cos(t), -a)};
}

}  // namespace

TEST_CASE("active kernel reports a known name") {
  const std::string& name = active_kernel_name();
  CHECK((name == "scalar" || name == "avx2"));
  CHECK(active_kernel() != nullptr);
}

TEST_CASE("scalar and AVX2 kernels are bit-for-bit interchangeable") {
  if (!cpu_has_avx2()) {
    MESSAGE("CPU lacks AVX2; skipping equivalence sweep");
    return;
  }
  Rng rng(31);
  for (int nq = 1; nq <= 10; ++nq) {
    const std::size_t dim = std::size_t{1} << nq;
    for (int trial = 0; trial < 8; ++trial) {
      const cvec base = random_state(rng, dim);
      const auto u = random_unitary2(rng);
      const std::size_t tbit = std::size_t{1}
                               << (rng.bits() % static_cast<unsigned>(nq));
      // Random control condition over the remaining bits.
      std::size_t cmask = rng.bits() & (dim - 1) & ~tbit;
      std::size_t cval = rng.bits() & cmask;
      cvec a = base, b = base;
      kernel2x2_scalar(a.data(), dim, tbit, cmask, cval, u.data());
      kernel2x2_avx2(b.data(), dim, tbit, cmask, cval, u.data());
      double max_diff = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        max_diff = std::max(max_diff, std::abs(a[i] - b[i]));
      }
      CHECK(max_diff < 1e-14);
    }
  }
}

TEST_CASE("kernels preserve the norm and act only where controlled") {
  Rng rng(32);
  const std::size_t dim = 64;
  const cvec base = random_state(rng, dim);
  const auto u = random_unitary2(rng);
  cvec a = base;
  const std::size_t tbit = 4, cmask = 3, cval = 2;
  kernel2x2_scalar(a.data(), dim, tbit, cmask, cval, u.data());
  double n2 = 0.0;
  for (const auto& x : a) n2 += std::norm(x);
  CHECK(std::abs(n2 - 1.0) < 1e-12);
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cmask) != cval) CHECK(a[i] == base[i]);
  }
}
