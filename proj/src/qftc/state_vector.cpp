#include "qftc/state_vector.hpp"

#include <cmath>

#include "qftc/kernels.hpp"

namespace qftc {

int RegisterLayout::add(const std::string& name, int width) {
  if (width <= 0) fail("RegisterLayout: register width must be positive");
  if (has(name)) fail("RegisterLayout: duplicate register '" + name + "'");
  const int start = total_;
  regs_.push_back(Register{name, start, width});
  total_ += width;
  // Generous cap: executors enforce their own limits (dense 40, sparse 127);
  // wider layouts exist only to size tally-only circuit constructions.
  if (total_ > 4096) fail("RegisterLayout: more than 4096 qubits");
  return start;
}

const Register& RegisterLayout::reg(const std::string& name) const {
  for (const auto& r : regs_) {
    if (r.name == name) return r;
  }
  fail("RegisterLayout: no register '" + name + "'");
}

bool RegisterLayout::has(const std::string& name) const {
  for (const auto& r : regs_) {
    if (r.name == name) return true;
  }
  return false;
}

int RegisterLayout::qubit(const std::string& name, int i) const {
  const Register& r = reg(name);
  if (i < 0 || i >= r.width) fail("RegisterLayout: qubit index out of range");
  return r.start + i;
}

std::uint64_t RegisterLayout::mask(const std::string& name) const {
  const Register& r = reg(name);
  if (shift(r) + r.width > 64) {
    fail("RegisterLayout: register '" + name + "' beyond the 64-bit field");
  }
  return ((std::uint64_t{1} << r.width) - 1) << shift(r);
}

int RegisterLayout::bit_shift(const std::string& name) const {
  return shift(reg(name));
}

std::uint64_t RegisterLayout::extract(std::uint64_t basis,
                                      const std::string& name) const {
  const Register& r = reg(name);
  if (shift(r) + r.width > 64) {
    fail("RegisterLayout: register '" + name + "' beyond the 64-bit field");
  }
  return (basis >> shift(r)) & ((std::uint64_t{1} << r.width) - 1);
}

std::uint64_t RegisterLayout::insert(std::uint64_t basis,
                                     const std::string& name,
                                     std::uint64_t value) const {
  const Register& r = reg(name);
  if (value >> r.width) fail("RegisterLayout: value too wide for register");
  return (basis & ~mask(name)) | (value << shift(r));
}

StateVector::StateVector(int num_qubits, std::uint64_t basis) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 40) {
    fail("StateVector: unsupported qubit count");
  }
  amp_.assign(std::size_t{1} << n_, cplx(0.0, 0.0));
  if (basis >= amp_.size()) fail("StateVector: initial basis out of range");
  amp_[basis] = 1.0;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

namespace {

std::size_t bit_of(int n, int qubit) {
  return std::size_t{1} << (n - 1 - qubit);
}

// cmask/cval for a control list; returns false if the condition is
// unsatisfiable (duplicate qubit with opposite polarity).
void control_masks(int n, const std::vector<Control>& controls,
                   std::size_t* cmask, std::size_t* cval) {
  *cmask = 0;
  *cval = 0;
  for (const auto& c : controls) {
    const std::size_t b = bit_of(n, c.qubit);
    if ((*cmask & b) != 0) fail("duplicate control qubit");
    *cmask |= b;
    if (c.positive) *cval |= b;
  }
}

}  // namespace

void StateVector::apply(const GateOp& g, GateTally* tally) {
  if (tally != nullptr) tally->one_two_qubit_count += g.tally_cost();
  std::size_t cmask = 0, cval = 0;
  control_masks(n_, g.controls, &cmask, &cval);
  const std::size_t dim = amp_.size();

  switch (g.kind) {
    case GateOp::Kind::kOneQubit: {
      const std::size_t tbit = bit_of(n_, g.target);
      if ((cmask & tbit) != 0) fail("control collides with target");
      active_kernel()(amp_.data(), dim, tbit, cmask, cval, g.u.data());
      return;
    }
    case GateOp::Kind::kSwap: {
      const std::size_t b1 = bit_of(n_, g.target);
      const std::size_t b2 = bit_of(n_, g.target2);
      if (((b1 | b2) & cmask) != 0) fail("control collides with target");
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & b1) != 0 || (i & b2) == 0) continue;  // visit (0,1) once
        if ((i & cmask) != cval) continue;
        std::swap(amp_[i], amp_[(i | b1) & ~b2]);
      }
      return;
    }
    case GateOp::Kind::kPhaseScalar: {
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cmask) == cval) amp_[i] *= g.phase;
      }
      return;
    }
  }
}

void StateVector::apply_dense(const std::vector<int>& qubits, const cmat& u,
                              const std::vector<Control>& controls) {
  const int w = static_cast<int>(qubits.size());
  const std::size_t block = std::size_t{1} << w;
  if (u.size() != block) fail("apply_dense: matrix size mismatch");
  std::size_t cmask = 0, cval = 0;
  control_masks(n_, controls, &cmask, &cval);

  std::vector<std::size_t> bits(qubits.size());
  std::size_t tmask = 0;
  for (int i = 0; i < w; ++i) {
    bits[i] = bit_of(n_, qubits[i]);
    tmask |= bits[i];
  }
  if ((tmask & cmask) != 0) fail("apply_dense: control collides with target");
  // offsets[p] = index bits for block-local pattern p (qubits[0] = MSB).
  std::vector<std::size_t> offsets(block, 0);
  for (std::size_t p = 0; p < block; ++p) {
    for (int i = 0; i < w; ++i) {
      if ((p >> (w - 1 - i)) & 1) offsets[p] |= bits[i];
    }
  }

  cvec in(block), out(block);
  const std::size_t dim = amp_.size();
  for (std::size_t base = 0; base < dim; ++base) {
    if ((base & tmask) != 0) continue;
    if ((base & cmask) != cval) continue;
    for (std::size_t p = 0; p < block; ++p) in[p] = amp_[base | offsets[p]];
    for (std::size_t r = 0; r < block; ++r) {
      cplx acc(0.0, 0.0);
      const cvec& row = u[r];
      for (std::size_t p = 0; p < block; ++p) acc += row[p] * in[p];
      out[r] = acc;
    }
    for (std::size_t p = 0; p < block; ++p) amp_[base | offsets[p]] = out[p];
  }
}

void StateVector::apply_basis_permutation(
    const std::function<std::uint64_t(std::uint64_t)>& f) {
  const std::size_t dim = amp_.size();
  cvec next(dim, cplx(0.0, 0.0));
  std::vector<bool> taken(dim, false);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::uint64_t j = f(i);
    if (j >= dim) fail("apply_basis_permutation: image out of range");
    if (taken[j]) fail("apply_basis_permutation: map is not injective");
    taken[j] = true;
    next[j] = amp_[i];
  }
  amp_ = std::move(next);
}

double StateVector::postselect(std::uint64_t mask, std::uint64_t val) {
  double p = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if ((i & mask) == val) p += std::norm(amp_[i]);
  }
  if (p < 1e-14) fail("postselect: vanishing-probability outcome");
  const double inv = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    amp_[i] = ((i & mask) == val) ? amp_[i] * inv : cplx(0.0, 0.0);
  }
  return p;
}

double StateVector::prob_of(std::uint64_t mask, std::uint64_t val) const {
  double p = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if ((i & mask) == val) p += std::norm(amp_[i]);
  }
  return p;
}

cplx overlap(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) fail("overlap: dimension mismatch");
  cplx s(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return s;
}

}  // namespace qftc
