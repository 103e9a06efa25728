#pragma once

#include "xyzdm/eig.hpp"
#include "xyzdm/matrix.hpp"

namespace xyzdm {

// Which component carries the antisymmetric (DM) exchange term.
enum class DmAxis { Z, X };

// Dimensionless couplings of the two-qubit anisotropic XYZ chain. J and Jz
// are the exchange couplings, gamma the in-plane anisotropy, D the DM
// strength along the axis selected by variant.
struct ModelParams {
  DmAxis variant = DmAxis::Z;
  double J = 1.0;
  double gamma = 0.0;
  double Jz = 0.0;
  double D = 0.0;
  bool operator==(const ModelParams&) const = default;
};

// J(1+g) XX + J(1-g) YY + Jz ZZ plus the DM term
// D (XY - YX) for DmAxis::Z or D (YZ - ZY) for DmAxis::X,
// assembled term by term from Pauli tensor products. Exactly Hermitian.
Mat4 build_hamiltonian(const ModelParams& p);

// Closed-form spectrum in the conventional labeling order (index 0..3 is the
// textbook E_1..E_4 for the chosen variant), NOT sorted; herm_eig is the
// sorted numeric counterpart. Degenerate limits are resolved by continuity:
// the Z-variant phase chi := 1 when J = D = 0, and the X-variant mixing
// angles (phi_1, phi_2) := (pi/2, 0) for D = 0 with J(1-gamma)+Jz >= 0 and
// (0, pi/2) with J(1-gamma)+Jz < 0, which keeps the basis orthonormal in
// every limit.
Spectrum analytic_spectrum(const ModelParams& p);

}  // namespace xyzdm
