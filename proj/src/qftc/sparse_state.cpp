#include "qftc/sparse_state.hpp"

#include <algorithm>
#include <cmath>

namespace qftc {

SparseState::SparseState(int num_qubits, skey basis) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 127) {
    fail("SparseState: unsupported qubit count");
  }
  if (num_qubits < 127 && (basis >> num_qubits) != 0) {
    fail("SparseState: initial basis out of range");
  }
  ent_.emplace_back(basis, cplx(1.0, 0.0));
}

double SparseState::norm() const {
  double s = 0.0;
  for (const auto& [k, a] : ent_) s += std::norm(a);
  return std::sqrt(s);
}

void SparseState::sort_and_merge() {
  std::sort(ent_.begin(), ent_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ent_.size();) {
    skey k = ent_[i].first;
    cplx a = ent_[i].second;
    for (++i; i < ent_.size() && ent_[i].first == k; ++i) a += ent_[i].second;
    ent_[out++] = {k, a};
  }
  ent_.resize(out);
}

void SparseState::apply(const GateOp& g, GateTally* tally) {
  if (tally != nullptr) tally->one_two_qubit_count += g.tally_cost();

  skey cmask = 0, cval = 0;
  for (const auto& c : g.controls) {
    const skey b = bit_of(c.qubit);
    if ((cmask & b) != 0) fail("duplicate control qubit");
    cmask |= b;
    if (c.positive) cval |= b;
  }

  switch (g.kind) {
    case GateOp::Kind::kPhaseScalar: {
      for (auto& [k, a] : ent_) {
        if ((k & cmask) == cval) a *= g.phase;
      }
      return;
    }
    case GateOp::Kind::kSwap: {
      const skey b1 = bit_of(g.target);
      const skey b2 = bit_of(g.target2);
      if (((b1 | b2) & cmask) != 0) fail("control collides with target");
      bool moved = false;
      for (auto& [k, a] : ent_) {
        if ((k & cmask) != cval) continue;
        const bool v1 = (k & b1) != 0, v2 = (k & b2) != 0;
        if (v1 != v2) {
          k ^= b1 | b2;
          moved = true;
        }
      }
      if (moved) sort_and_merge();
      return;
    }
    case GateOp::Kind::kOneQubit:
      break;
  }

  const skey tbit = bit_of(g.target);
  if ((tbit & cmask) != 0) fail("control collides with target");

  if (g.is_diagonal()) {
    for (auto& [k, a] : ent_) {
      if ((k & cmask) == cval) a *= (k & tbit) ? g.u[3] : g.u[0];
    }
    return;
  }
  if (g.is_antidiagonal()) {
    for (auto& [k, a] : ent_) {
      if ((k & cmask) != cval) continue;
      a *= (k & tbit) ? g.u[1] : g.u[2];
      k ^= tbit;
    }
    sort_and_merge();
    return;
  }

  // General case: each matching entry splits in two.
  std::vector<std::pair<skey, cplx>> next;
  next.reserve(ent_.size() * 2);
  for (const auto& [k, a] : ent_) {
    if ((k & cmask) != cval) {
      next.emplace_back(k, a);
      continue;
    }
    const int b = (k & tbit) ? 1 : 0;
    const skey k0 = k & ~tbit;
    next.emplace_back(k0, g.u[b] * a);
    next.emplace_back(k0 | tbit, g.u[2 + b] * a);
  }
  ent_ = std::move(next);
  sort_and_merge();
  compress(1e-14);
}

void SparseState::compress(double tol) {
  std::size_t out = 0;
  for (const auto& e : ent_) {
    if (std::abs(e.second) > tol) ent_[out++] = e;
  }
  ent_.resize(out);
}

}  // namespace qftc
