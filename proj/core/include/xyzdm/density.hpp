#pragma once

#include "xyzdm/matrix.hpp"

namespace xyzdm {

// Validated two-qubit density matrix. Construction goes through the factories
// so that every instance in the program is Hermitian, unit-trace, and PSD
// within the library tolerances; downstream code never re-checks.
class DensityMatrix {
 public:
  // Validates m: hermiticity defect <= kHermitianTol and |tr - 1| <= kTraceTol
  // (numeric_error otherwise), then eigen-checks positivity. Eigenvalues below
  // -kPsdClipTol throw numeric_error; values in [-kPsdClipTol, 0) are clipped
  // to zero, in which case the stored matrix is the clipped reconstruction.
  // Input that passes all checks without clipping is stored bit-for-bit.
  static DensityMatrix from_matrix(const Mat4& m);

  // |v><v| / <v|v>. Throws std::invalid_argument for a zero vector. Exact by
  // construction, so no validation pass runs.
  static DensityMatrix pure(const Vec4& v);

  const Mat4& matrix() const { return rho_; }
  double purity() const;                 // tr(rho^2)
  double population(int i) const;        // rho_ii, i in 0..3

 private:
  explicit DensityMatrix(const Mat4& rho) : rho_(rho) {}
  Mat4 rho_;
};

}  // namespace xyzdm
