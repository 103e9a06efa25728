#pragma once

#include <array>

#include "xyzdm/density.hpp"
#include "xyzdm/matrix.hpp"

namespace xyzdm {

// Two-qubit input cos(theta/2)|10> + e^{i phi} sin(theta/2)|01>,
// theta in [0, pi], phi in [0, 2 pi).
struct InputState {
  double theta = 0.0;
  double phi = 0.0;
  bool operator==(const InputState&) const = default;
};

Vec4 input_ket(const InputState& in);
DensityMatrix input_state(const InputState& in);

// The four Bell projectors in measurement-outcome order:
//   E0 = |00+11>, E1 = |00-11>, E2 = |01-10>, E3 = |01+10>
// (unnormalized labels; each ket carries 1/sqrt(2)). Sum is the identity.
struct BellBasis {
  std::array<Mat4, 4> projectors;
};
BellBasis bell_projectors();

// Pauli correction applied for outcome k: sigma_y, sigma_x, identity,
// sigma_z respectively. This is the standard singlet-protocol correction
// table expressed in the outcome order above; it is what makes a perfect
// E2- or E3-channel teleport with fidelity 1 (see tests).
Mat2 correction_pauli(int outcome);

// p_k = tr[E^k rho_ch]; nonnegative, summing to 1 within rounding. Values
// below -1e-10 signal a broken channel state and throw numeric_error;
// smaller negatives are rounding noise and clip to 0.
std::array<double, 4> channel_probs(const DensityMatrix& rho_ch);

// Two-copy teleportation: rho_out = sum_ij p_i(A) p_j(B)
// (sigma_i (x) sigma_j) rho_in (sigma_i (x) sigma_j), with sigma_k the
// correction for outcome k. Trace- and positivity-preserving.
DensityMatrix teleport_output(const DensityMatrix& rho_a,
                              const DensityMatrix& rho_b,
                              const InputState& in);

double output_concurrence(const DensityMatrix& rho_a,
                          const DensityMatrix& rho_b, const InputState& in);

// Mixed-state fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2, symmetric, in [0, 1].
double fidelity(const DensityMatrix& rho_in, const DensityMatrix& rho_out);

// Strictly better than the best classical strategy for pure-state inputs.
bool classical_threshold_exceeded(double f);

}  // namespace xyzdm
