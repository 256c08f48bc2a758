#include "qftc/circulant.hpp"

#include <cmath>

#include "qftc/arithmetic.hpp"
#include "qftc/circuits_std.hpp"
#include "qftc/oracle_prep.hpp"

namespace qftc {

namespace {

void check_unit(const cvec& v, const char* what) {
  if (!is_pow2(v.size()) || v.size() < 2) {
    fail(std::string(what) + ": length must be a power of two with L >= 1");
  }
  double n2 = 0.0;
  for (const auto& a : v) n2 += std::norm(a);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-8) {
    fail(std::string(what) + ": non-unit vector");
  }
}

// s~ = QFT^dag |s>: s~_k = (1/sqrt(N)) sum_j e^{-2 pi i j k / N} s_j.
cvec inverse_qft_coeffs(const cvec& s) {
  cvec t = s;
  fft_pow2(t, -1);
  const double inv = 1.0 / std::sqrt(static_cast<double>(s.size()));
  for (auto& v : t) v *= inv;
  return t;
}

}  // namespace

bool CirculantSpec::hermitian() const {
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(c[j] - std::conj(c[(n - j) % n])) > 1e-10) return false;
  }
  return true;
}

SpectrumResult circulant_spectrum(const CirculantSpec& spec) {
  check_unit(spec.c, "circulant_spectrum");
  SpectrumResult r;
  r.f = dft_reference(spec.c);
  r.lambda.resize(r.f.size());
  const double rn = std::sqrt(static_cast<double>(r.f.size()));
  for (std::size_t k = 0; k < r.f.size(); ++k) r.lambda[k] = rn * r.f[k];
  return r;
}

ApplyCirculantResult apply_circulant(const cvec& s, const CirculantSpec& spec) {
  check_unit(s, "apply_circulant");
  check_unit(spec.c, "apply_circulant");
  if (s.size() != spec.c.size()) fail("apply_circulant: size mismatch");
  const int l = ilog2(s.size());

  // Predicted success probability; C|s> = 0 is rejected up front.
  const cvec st = inverse_qft_coeffs(s);
  const cvec f = dft_reference(spec.c);
  double predicted = 0.0;
  for (std::size_t k = 0; k < st.size(); ++k) predicted += std::norm(st[k] * f[k]);
  if (predicted < 1e-14) fail("apply_circulant: C|s> vanishes");

  RegisterLayout lay;
  lay.add("j", l);
  lay.add("a", l);
  CircuitProgram prog(lay);
  const auto jq = reg_qubits(lay, "j");
  const auto aq = reg_qubits(lay, "a");
  prog.append_oracle(prepare_oracle(s, jq));
  prog.append(qft_program(jq).inverse());
  prog.append_oracle(prepare_oracle(spec.c, aq));
  append_controlled_phase_network(prog, aq, jq, +1);
  for (int q : aq) prog.append(g_h(q));

  StateVector sv(2 * l);
  GateTally tally;
  for (const auto& g : prog.gates()) sv.apply(g, nullptr);
  tally = prog.tally();
  const double success = sv.postselect(lay.mask("a"), 0);

  // Slice the (now exact) |0^L> ancilla and finish with the QFT.
  StateVector out(l);
  for (std::size_t j = 0; j < out.dim(); ++j) {
    out.amplitudes()[j] = sv.amplitudes()[j << l];
  }
  const CircuitProgram qft = qft_program([&] {
    std::vector<int> q(l);
    for (int i = 0; i < l; ++i) q[i] = i;
    return q;
  }());
  GateTally qt = qft.tally();
  qft.run(out);
  tally += qt;
  return ApplyCirculantResult{std::move(out), success, tally};
}

CircuitProgram digit_phase_layer(int l, double t, int p0) {
  const double rn = std::sqrt(std::ldexp(1.0, l));
  RegisterLayout lay;
  lay.add("y", p0 + 1);
  CircuitProgram prog(lay);
  prog.append(g_phase(0, rn * t));  // sign digit f0: e^{+i sqrt(N) t}
  for (int p = 1; p <= p0; ++p) {
    prog.append(g_phase(p, -rn * t * std::ldexp(1.0, -p)));
  }
  return prog;
}

double EvolutionConfig::epsilon_f(std::size_t n) const {
  if (t == 0.0) fail("epsilon_f undefined at t = 0");
  return std::sqrt(delta) /
         (std::sqrt(static_cast<double>(n)) * std::abs(t));
}

int EvolutionConfig::eff_p0(std::size_t n) const {
  if (p0 > 0) return p0;
  const double eps = epsilon_f(n);
  int p = 1;
  while (std::ldexp(1.0, -p) > eps && p < 40) ++p;
  return p;
}

EvolutionResult evolve_circulant(const cvec& s, const CirculantSpec& spec,
                                 const EvolutionConfig& cfg) {
  check_unit(s, "evolve_circulant");
  check_unit(spec.c, "evolve_circulant");
  if (s.size() != spec.c.size()) fail("evolve_circulant: size mismatch");
  if (!spec.hermitian()) {
    fail("evolve_circulant: spec is not Hermitian (no Hamiltonian)");
  }
  const std::size_t n = s.size();
  const int l = ilog2(n);

  if (cfg.t == 0.0) {
    // No evolution: the whole pipeline collapses to the identity.
    StateVector out(l);
    out.amplitudes().assign(n, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) out.amplitudes()[j] = s[j];
    return EvolutionResult{std::move(out), 1.0, cfg.p0 > 0 ? cfg.p0 : 1, 0,
                           GateTally{}};
  }

  QftcConfig qcfg;
  qcfg.p0 = cfg.eff_p0(n);
  qcfg.delta = cfg.delta;
  qcfg.p_est = cfg.p_est;
  // Validates c (unit, real DFT by Hermiticity, representable F_k) and yields
  // P(code | k) per eigenvalue index.
  const QftcResult qr = run_block_diagonal(spec.c, qcfg);

  const FixedPointFormat fmt = FixedPointFormat::complement(qcfg.p0);
  const double rn = std::sqrt(static_cast<double>(n));
  const cvec st = inverse_qft_coeffs(s);
  cvec amp(n);
  double proj = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cplx g(0.0, 0.0);
    for (const auto& [code, pr] : qr.dist[k]) {
      const double val = decode_bits(code, fmt);
      g += pr * std::polar(1.0, -rn * cfg.t * val);
    }
    amp[k] = st[k] * g;
    proj += std::norm(amp[k]);
  }
  if (proj < 1e-14) fail("evolve_circulant: vanishing clean-ancilla mass");
  const double inv = 1.0 / std::sqrt(proj);
  // Final QFT back to the position basis.
  fft_pow2(amp, +1);
  const double h = inv / rn;
  StateVector out(l);
  for (std::size_t j = 0; j < n; ++j) out.amplitudes()[j] = amp[j] * h;

  EvolutionResult res{std::move(out), proj, qcfg.p0, qr.p_est, qr.tally};
  // Extra plumbing around the QFTC core: O_s, two QFTs, the digit layer.
  res.tally.oracle_calls += 1;
  std::vector<int> q(l);
  for (int i = 0; i < l; ++i) q[i] = i;
  res.tally += qft_program(q).tally() * 2;
  res.tally += digit_phase_layer(l, cfg.t, qcfg.p0).tally();
  return res;
}

}  // namespace qftc
