#include "qftc/oracle_prep.hpp"

#include <cmath>

namespace qftc {

CircuitProgram prepare_oracle(const cvec& x, const std::vector<int>& qubits) {
  const std::size_t n = x.size();
  const int l = static_cast<int>(qubits.size());
  if (!is_pow2(n) || n != (std::size_t{1} << l)) {
    fail("prepare_oracle: length must be 2^(number of qubits)");
  }
  double norm2 = 0.0;
  for (const auto& v : x) norm2 += std::norm(v);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8) {
    fail("prepare_oracle: input is not a unit vector");
  }

  CircuitProgram prog;
  // Rotation tree: at depth d, node `prefix` splits the probability weight of
  // indices starting with `prefix` between qubit d = 0 and 1.
  for (int d = 0; d < l; ++d) {
    const int tail = l - 1 - d;  // free bits below qubit d
    for (std::size_t prefix = 0; prefix < (std::size_t{1} << d); ++prefix) {
      double w0 = 0.0, w1 = 0.0;
      const std::size_t base = prefix << (tail + 1);
      for (std::size_t t = 0; t < (std::size_t{1} << tail); ++t) {
        w0 += std::norm(x[base | t]);
        w1 += std::norm(x[base | (std::size_t{1} << tail) | t]);
      }
      if (w0 + w1 < 1e-300) continue;  // dead branch, never reached
      GateOp g = g_ry(qubits[d], 2.0 * std::atan2(std::sqrt(w1), std::sqrt(w0)));
      for (int i = 0; i < d; ++i) {
        g.controls.push_back({qubits[i], ((prefix >> (d - 1 - i)) & 1) != 0});
      }
      prog.append(g);
    }
  }
  // Phase corrections: multiply basis state |j> by e^{i arg(x_j)}.
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(x[j]) < 1e-300) continue;
    const double ph = std::arg(x[j]);
    if (ph == 0.0) continue;
    GateOp g = g_global_phase(std::polar(1.0, ph));
    for (int i = 0; i < l; ++i) {
      g.controls.push_back({qubits[i], ((j >> (l - 1 - i)) & 1) != 0});
    }
    prog.append(g);
  }
  return prog;
}

CircuitProgram add_control(const CircuitProgram& prog, Control c) {
  CircuitProgram out(prog.layout());
  for (const auto& g : prog.gates()) out.append(with_controls(g, {c}));
  return out;
}

RealReduction real_reduction(const cvec& x) {
  const std::size_t n = x.size();
  if (!is_pow2(n)) fail("real_reduction: length must be a power of two");
  RealReduction r;
  r.x_re.assign(n, cplx(0.0, 0.0));
  r.x_im.assign(n, cplx(0.0, 0.0));
  const cplx half_over_i(0.0, -0.5);  // 1/(2i)
  for (std::size_t j = 0; j < n; ++j) {
    const cplx mirror = std::conj(x[(n - j) % n]);
    r.x_re[j] = 0.5 * (x[j] + mirror);
    r.x_im[j] = half_over_i * (x[j] - mirror);
  }
  double s_re = 0.0, s_im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    s_re += std::norm(r.x_re[j]);
    s_im += std::norm(r.x_im[j]);
  }
  r.norm_re = std::sqrt(s_re);
  r.norm_im = std::sqrt(s_im);
  if (r.norm_re > 1e-14) {
    for (auto& v : r.x_re) v /= r.norm_re;
  } else {
    r.norm_re = 0.0;
    r.x_re.assign(n, cplx(0.0, 0.0));
  }
  if (r.norm_im > 1e-14) {
    for (auto& v : r.x_im) v /= r.norm_im;
  } else {
    r.norm_im = 0.0;
    r.x_im.assign(n, cplx(0.0, 0.0));
  }
  return r;
}

}  // namespace qftc
