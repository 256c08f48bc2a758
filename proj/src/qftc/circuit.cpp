#include "qftc/circuit.hpp"

#include <algorithm>

namespace qftc {

void CircuitProgram::append(GateOp g) {
  tally_.one_two_qubit_count += g.tally_cost();
  if (!tally_only_) gates_.push_back(std::move(g));
}

void CircuitProgram::append(const CircuitProgram& sub) {
  if (!tally_only_) {
    gates_.insert(gates_.end(), sub.gates_.begin(), sub.gates_.end());
  }
  tally_ += sub.tally_;
}

void CircuitProgram::append_oracle(const CircuitProgram& oracle,
                                   bool inverse_call) {
  if (!tally_only_) {
    gates_.insert(gates_.end(), oracle.gates_.begin(), oracle.gates_.end());
  }
  if (inverse_call) {
    ++tally_.inverse_oracle_calls;
  } else {
    ++tally_.oracle_calls;
  }
}

CircuitProgram CircuitProgram::inverse() const {
  CircuitProgram inv(layout_);
  inv.tally_only_ = tally_only_;
  inv.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    inv.gates_.push_back(it->inverse());
  }
  inv.tally_ = tally_;
  std::swap(inv.tally_.oracle_calls, inv.tally_.inverse_oracle_calls);
  return inv;
}

void CircuitProgram::run(StateVector& s) const {
  for (const auto& g : gates_) s.apply(g);
}

void CircuitProgram::run(SparseState& s) const {
  for (const auto& g : gates_) s.apply(g);
}

cmat CircuitProgram::to_matrix(int num_qubits) const {
  const std::size_t dim = std::size_t{1} << num_qubits;
  cmat m(dim, cvec(dim, cplx(0.0, 0.0)));
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s(num_qubits, col);
    run(s);
    for (std::size_t row = 0; row < dim; ++row) {
      m[row][col] = s.amplitudes()[row];
    }
  }
  return m;
}

cmat mat_mul(const cmat& a, const cmat& b) {
  const std::size_t n = a.size();
  cmat c(n, cvec(n, cplx(0.0, 0.0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i][k];
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  }
  return c;
}

cmat mat_pow_repeated(const cmat& b, long long e) {
  const std::size_t n = b.size();
  cmat acc(n, cvec(n, cplx(0.0, 0.0)));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1.0;
  for (long long i = 0; i < e; ++i) acc = mat_mul(b, acc);
  return acc;
}

cmat mat_pow2k(cmat b, int r) {
  for (int i = 0; i < r; ++i) b = mat_mul(b, b);
  return b;
}

}  // namespace qftc
