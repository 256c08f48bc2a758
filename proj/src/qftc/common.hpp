#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qftc {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Deterministic, bit-portable random source. std::mt19937_64 has a pinned
// algorithm, but std::normal_distribution does not, so normals come from an
// explicit Box-Muller transform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (one spare cached).
  double normal();

  std::uint64_t bits() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Random complex unit vector of dimension n.
cvec random_unit_vector(Rng& rng, std::size_t n);

// In-place radix-2 FFT with kernel sum_j x_j e^{-2*pi*i*j*k/n} (sign=-1) or
// e^{+2*pi*i*j*k/n} (sign=+1). n must be a power of two. No 1/sqrt(n) factor.
void fft_pow2(cvec& a, int sign);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int ilog2(std::size_t n);  // exact log2 of a power of two; throws otherwise

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

}  // namespace qftc
