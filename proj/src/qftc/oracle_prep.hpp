#pragma once

#include "qftc/circuit.hpp"

namespace qftc {

// Amplitude-loading oracle O_x: |0^L> -> sum_j x_j |j> on the given qubits
// (MSB-first), via a rotation tree plus per-basis phase corrections. x must
// be a unit vector of power-of-two length.
CircuitProgram prepare_oracle(const cvec& x, const std::vector<int>& qubits);

// Same program with an extra control on every gate (including the phase
// corrections, so the controlled unitary is exact, not merely up to phase).
CircuitProgram add_control(const CircuitProgram& prog, Control c);

// Real-part input reduction: x_re_j = (x_j + conj(x_{N-j}))/2 and
// x_im_j = (x_j - conj(x_{N-j}))/(2i), each renormalized with its norm
// returned, so dft(x_re)*norm_re = Re(dft(x)) and dft(x_im)*norm_im =
// Im(dft(x)). A vanishing part keeps its zero vector with norm 0.
struct RealReduction {
  cvec x_re;
  cvec x_im;
  double norm_re = 0.0;
  double norm_im = 0.0;
};
RealReduction real_reduction(const cvec& x);

}  // namespace qftc
