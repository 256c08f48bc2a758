#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qftc/common.hpp"
#include "qftc/gate_op.hpp"

namespace qftc {

// Sparse amplitude map for wide circuits whose superposition stays confined
// to a small set of basis states (the arithmetic registers in gate-level
// fixed-point circuits). Keys are 128-bit so register files beyond 64 qubits
// are representable; entries are kept sorted by key.
using skey = unsigned __int128;

class SparseState {
 public:
  SparseState(int num_qubits, skey basis);

  int num_qubits() const { return n_; }
  std::size_t size() const { return ent_.size(); }
  const std::vector<std::pair<skey, cplx>>& entries() const { return ent_; }

  double norm() const;
  void apply(const GateOp& g, GateTally* tally = nullptr);

  // Drops entries with |amp| <= tol (after any merging done by apply).
  void compress(double tol);

  skey bit_of(int qubit) const { return skey{1} << (n_ - 1 - qubit); }

 private:
  void sort_and_merge();

  int n_;
  std::vector<std::pair<skey, cplx>> ent_;
};

}  // namespace qftc
