#pragma once

#include "qftc/qftc_algorithm.hpp"
#include "qftc/reference.hpp"

namespace qftc {

// First row c of a circulant matrix C (C[a][b] = c[(b-a) mod N]), unit norm.
struct CirculantSpec {
  cvec c;
  bool hermitian() const;  // c_j == conj(c_{N-j}) within 1e-10
};

// Eigenvalues via the DFT: Lambda_k = sqrt(N) * F_k, F_k = dft(c)_k.
struct SpectrumResult {
  cvec f;
  cvec lambda;
};
SpectrumResult circulant_spectrum(const CirculantSpec& spec);

// C|s> by post-selection: O_s -> QFT^dag -> O_c (ancilla) -> controlled phase
// network -> H^L (ancilla) -> postselect |0^L> -> QFT. The returned state is
// the normalized C|s>; success_prob = sum_k |s~_k F_k|^2 = ||C s||^2 / N,
// measured from the projection itself. Errors when C|s> = 0 (success below
// 1e-14). Non-Hermitian specs are accepted.
struct ApplyCirculantResult {
  StateVector state;
  double success_prob;
  GateTally tally;
};
ApplyCirculantResult apply_circulant(const cvec& s, const CirculantSpec& spec);

// e^{-i sqrt(N) t * value} as per-digit phases on a complemental value
// register f0.f1...fp0 (qubit 0 = f0): e^{+i sqrt(N) t} on f0 and
// e^{-i sqrt(N) 2^-p t} on f_p.
CircuitProgram digit_phase_layer(int l, double t, int p0);

// Hamiltonian evolution e^{-iCt}|s> via QFTC: QFT^dag on s, QFTC encodes
// |F_k> (block-diagonal reduction), digit phase layer, QFTC uncompute with
// projection of the ancilla/value registers onto |0...0> (probability
// reported), QFT. Requires a Hermitian spec and representable F_k.
struct EvolutionConfig {
  double t = 1.0;
  double delta = 0.1;
  int p0 = 0;    // 0 => derived from epsilon_F = sqrt(delta) / (sqrt(N) t)
  int p_est = 0; // 0 => derived QFTC padding

  double epsilon_f(std::size_t n) const;
  int eff_p0(std::size_t n) const;
};

struct EvolutionResult {
  StateVector state;       // L qubits, normalized output
  double projection_prob;  // clean-ancilla mass before renormalization
  int p0 = 0, p_est = 0;
  GateTally tally;
};
EvolutionResult evolve_circulant(const cvec& s, const CirculantSpec& spec,
                                 const EvolutionConfig& cfg);

}  // namespace qftc
