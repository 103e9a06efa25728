#pragma once

#include <array>

#include "xyzdm/matrix.hpp"

namespace xyzdm {

// Eigendecomposition of a 4x4 Hermitian matrix. Energies ascend; vectors[k]
// is the unit eigenvector for energies[k], columns of a unitary.
struct Spectrum {
  std::array<double, 4> energies{};
  std::array<Vec4, 4> vectors{};

  // Max deviation of <v_i|v_j> from delta_ij.
  double orthonormality_defect() const;
  bool is_orthonormal(double tol = kOrthonormalTol) const;

  // sum_k energies[k] |v_k><v_k|; used by tests to bound reconstruction error.
  Mat4 reconstruct() const;
};

// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius mass drops
// below 1e-14 of the matrix norm; throws numeric_error after 100 sweeps
// (never observed for Hermitian input, guards against NaN poisoning).
// Ordering is deterministic: eigenvalues ascend, and inside a degenerate
// cluster each vector is phase-fixed (first component with |c| > 1e-8 made
// real-positive) then sorted lexicographically by (re, im) of its entries,
// so equal-spectrum inputs always give byte-identical bases.
Spectrum herm_eig(const Mat4& m);

// Hermitian PSD square root via herm_eig. Eigenvalues below -kPsdClipTol
// throw numeric_error; small negatives clip to zero, and eigenvalues under
// kRankFloor * lam_max are dropped as rank deficiency rather than fed to
// sqrt, which would turn O(eps) solver noise into O(sqrt(eps)) output.
Mat4 psd_sqrt(const Mat4& m);

}  // namespace xyzdm
