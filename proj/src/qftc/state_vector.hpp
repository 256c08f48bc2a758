#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qftc/common.hpp"
#include "qftc/gate_op.hpp"
#include "qftc/reference.hpp"

namespace qftc {

// Qubit convention used everywhere: qubit 0 is the most significant bit of
// the basis index. A register occupying qubits [start, start+width) therefore
// holds its value MSB-first in a contiguous bit field of the index.
struct Register {
  std::string name;
  int start = 0;
  int width = 0;
};

class RegisterLayout {
 public:
  // Appends a register after the existing ones; returns its start qubit.
  int add(const std::string& name, int width);

  const Register& reg(const std::string& name) const;
  bool has(const std::string& name) const;
  int num_qubits() const { return total_; }
  int qubit(const std::string& name, int i) const;  // i-th (MSB-first) qubit

  // Bit-field helpers on full basis indices.
  std::uint64_t mask(const std::string& name) const;
  int bit_shift(const std::string& name) const;  // low-end bit position
  std::uint64_t extract(std::uint64_t basis, const std::string& name) const;
  std::uint64_t insert(std::uint64_t basis, const std::string& name,
                       std::uint64_t value) const;

  const std::vector<Register>& registers() const { return regs_; }

 private:
  int shift(const Register& r) const { return total_ - r.start - r.width; }
  std::vector<Register> regs_;
  int total_ = 0;
};

class StateVector {
 public:
  explicit StateVector(int num_qubits, std::uint64_t basis = 0);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  cvec& amplitudes() { return amp_; }
  const cvec& amplitudes() const { return amp_; }
  double norm() const;

  void apply(const GateOp& g, GateTally* tally = nullptr);

  // Dense w-qubit unitary (2^w x 2^w, rows/cols indexed with qubits[0] as
  // MSB) applied under an optional control condition. Used to run fused
  // sub-circuit unitaries; not charged to any tally.
  void apply_dense(const std::vector<int>& qubits, const cmat& u,
                   const std::vector<Control>& controls = {});

  // Classical reversible map on basis states: amp'[f(i)] = amp[i]. Verifies
  // that f is a permutation of the touched indices.
  void apply_basis_permutation(
      const std::function<std::uint64_t(std::uint64_t)>& f);

  // Projects onto (i & mask) == val, renormalizes, returns the probability.
  // Throws if the probability falls below 1e-14.
  double postselect(std::uint64_t mask, std::uint64_t val);

  double prob_of(std::uint64_t mask, std::uint64_t val) const;

 private:
  int n_;
  cvec amp_;
};

cplx overlap(const StateVector& a, const StateVector& b);

}  // namespace qftc
