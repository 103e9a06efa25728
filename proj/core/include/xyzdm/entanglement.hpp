#pragma once

#include "xyzdm/density.hpp"
#include "xyzdm/matrix.hpp"

namespace xyzdm {

// Spin-flipped state S rho* S with S = sigma_y (x) sigma_y. Hermitian PSD.
Mat4 spin_flip(const DensityMatrix& rho);

// Wootters concurrence in [0, 1]. The defining eigenvalues of rho * flipped
// are taken from the Hermitian reformulation sqrt(rho) flipped sqrt(rho)
// (same spectrum, Jacobi-friendly): lambda_i = sqrt(clip(eig)), then
// max(0, 2 max lambda - sum lambda), clamped to 1 against rounding.
double concurrence(const DensityMatrix& rho);

// The closed-form lambda route for states confined to the {|01>, |10>} block:
//   lambda_{3,4} = sqrt|r22 r33 + r23 r32 +- 2 sqrt(r23 r32 r22 r33)|,
// lambda_1 = lambda_2 = 0, then the same max expression. Agrees with
// concurrence within 1e-9 on its domain. Entries outside the block larger
// than 1e-10 in magnitude throw std::invalid_argument.
double concurrence_dz_closed(const DensityMatrix& rho);

}  // namespace xyzdm
