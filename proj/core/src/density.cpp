#include "xyzdm/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "xyzdm/eig.hpp"
#include "xyzdm/errors.hpp"

namespace xyzdm {

DensityMatrix DensityMatrix::from_matrix(const Mat4& m) {
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol)
    throw numeric_error("density: hermiticity defect " + std::to_string(defect));

  Mat4 sym;  // bit-preserving for exactly Hermitian input
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j)
      sym.a[i][j] = 0.5 * (m.a[i][j] + std::conj(m.a[j][i]));
    sym.a[i][i] = cplx(sym.a[i][i].real(), 0.0);
  }

  const double tr = sym.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw numeric_error("density: trace " + std::to_string(tr) + " != 1");

  const Spectrum s = herm_eig(sym);
  double lam_min = s.energies[0];
  if (lam_min < -kPsdClipTol)
    throw numeric_error("density: eigenvalue " + std::to_string(lam_min) +
                        " is negative beyond clip tolerance");
  if (lam_min >= 0.0) return DensityMatrix(sym);

  Mat4 clipped;  // rebuild only when clipping actually changed the spectrum
  for (int k = 0; k < 4; ++k) {
    const double lam = s.energies[k] < 0.0 ? 0.0 : s.energies[k];
    if (lam == 0.0) continue;
    clipped += cplx(lam) * outer(s.vectors[k], s.vectors[k]);
  }
  return DensityMatrix(clipped);
}

DensityMatrix DensityMatrix::pure(const Vec4& v) {
  const double n = vec_norm(v);
  if (n < 1e-300)
    throw std::invalid_argument("density: cannot normalize a zero vector");
  Vec4 u = v;
  if (n != 1.0)
    for (auto& x : u) x /= n;
  return DensityMatrix(outer(u, u));
}

double DensityMatrix::purity() const {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += std::norm(rho_.a[i][j]);
  return s;  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
}

double DensityMatrix::population(int i) const {
  if (i < 0 || i > 3) throw std::invalid_argument("density: population index out of range");
  return rho_.a[i][i].real();
}

}  // namespace xyzdm
