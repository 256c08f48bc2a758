#pragma once

#include <cstdint>
#include <vector>

#include "qftc/circuit.hpp"
#include "qftc/fixed_point.hpp"

namespace qftc {

std::vector<int> reg_qubits(const RegisterLayout& layout,
                            const std::string& name);

// --- Fourier-basis phase cascades -------------------------------------------
// All cascades assume the accumulator register c (MSB-first, width qubits)
// has already been mapped to the Fourier basis by qft_program(c). Adding the
// ring integer `amount` is then a layer of single-qubit phases.

void append_const_cascade(CircuitProgram& prog, const std::vector<int>& c_q,
                          std::uint64_t amount, int sign,
                          const std::vector<Control>& ctrl = {});

// c += sign * 2^-l * b, b a plain n-digit register. Exact; throws if a digit
// of b falls below the ulp of c (mirrors ref_add).
void append_add_cascade(CircuitProgram& prog, const std::vector<int>& c_q,
                        const FixedPointFormat& fmt_c,
                        const std::vector<int>& b_q, int l, int sign,
                        const std::vector<Control>& ctrl = {});

// c += sign * 2^scale_pow2 * a * b with per-digit-pair rounding, mirroring
// ref_mul_amount exactly (ordered pairs, a == b allowed).
void append_mul_cascade(CircuitProgram& prog, const std::vector<int>& c_q,
                        const FixedPointFormat& fmt_c,
                        const std::vector<int>& a_q,
                        const std::vector<int>& b_q, int sign,
                        int scale_pow2 = 0);

// c += sign * 2^scale_pow2 * K * r with K pre-encoded to k_digits and
// per-digit rounding, mirroring ref_const_mul_amount exactly.
void append_const_mul_cascade(CircuitProgram& prog, const std::vector<int>& c_q,
                              const FixedPointFormat& fmt_c, double k,
                              int k_digits, const std::vector<int>& r_q,
                              int sign, int scale_pow2 = 0);

// --- Wrapped arithmetic circuits (QFT + cascade + inverse QFT) --------------

void append_qft_adder(CircuitProgram& prog, const std::vector<int>& c_q,
                      const FixedPointFormat& fmt_c,
                      const std::vector<int>& b_q, int l, int sign);

void append_multiply_adder(CircuitProgram& prog, const std::vector<int>& c_q,
                           const FixedPointFormat& fmt_c,
                           const std::vector<int>& a_q,
                           const std::vector<int>& b_q, int sign,
                           int scale_pow2 = 0);

void append_const_multiply_adder(CircuitProgram& prog,
                                 const std::vector<int>& c_q,
                                 const FixedPointFormat& fmt_c, double k,
                                 int k_digits, const std::vector<int>& r_q,
                                 int sign, int scale_pow2 = 0);

// out = alpha - beta as a complemental code with `width` fraction digits.
// alpha/beta are plain width-digit registers; out has width+1 qubits and
// must start in |0...0>. Mirrors ref_sub.
void append_sigma_minus(CircuitProgram& prog, const std::vector<int>& out_q,
                        const std::vector<int>& alpha_q,
                        const std::vector<int>& beta_q);

// --- Taylor sine / cosine gates ----------------------------------------------
// sin(pi x) (plain n-digit output) or cos(pi x) (complemental n-digit output)
// of a plain n-digit input x. The Taylor terms are scaled by 1/8 so every
// coefficient fits in [0, 1); the accumulator is a plain ring register whose
// value 8-fold relabeling yields the output, with explicit saturation fixups
// for results that round to exactly +1.
struct SineGateConfig {
  int n = 3;              // input/output fraction digits
  bool cosine = false;
  int terms = 3;          // t
  int working_digits = 0; // p', width of the power registers
  int acc_digits = 0;     // accumulator ring width
  int k_digits = 0;       // coefficient encoding digits

  static SineGateConfig sine(int n);
  static SineGateConfig cos_gate(int n);

  int out_qubits() const { return cosine ? n + 1 : n; }
};

// Registers: "x"(n), "out", "acc", "x2"(p'), "w<j>"(p') for the higher powers.
// With tally_only the gate list is dropped and only the cost ledger is built
// (usable at widths far beyond any executor's limit).
CircuitProgram sine_gate_program(const SineGateConfig& cfg,
                                 bool tally_only = false);

// Bit-exact classical mirror of sine_gate_program: output code bits for a
// basis input x (plain n-digit code bits).
std::uint64_t ref_sine_gate(std::uint64_t x_bits, const SineGateConfig& cfg);

}  // namespace qftc
