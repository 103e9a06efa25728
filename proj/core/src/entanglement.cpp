#include "xyzdm/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "xyzdm/eig.hpp"
#include "xyzdm/errors.hpp"

namespace xyzdm {

Mat4 spin_flip(const DensityMatrix& rho) {
  // S = sigma_y (x) sigma_y is the antidiagonal (-1, 1, 1, -1), so
  // (S rho* S)[i][j] = s_i s_j conj(rho[3-i][3-j]).
  static constexpr double kSign[4] = {-1.0, 1.0, 1.0, -1.0};
  const Mat4& m = rho.matrix();
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.a[i][j] = kSign[i] * kSign[j] * std::conj(m.a[3 - i][3 - j]);
  return out;
}

double concurrence(const DensityMatrix& rho) {
  const Mat4 root = psd_sqrt(rho.matrix());
  const Mat4 herm = root * spin_flip(rho) * root;
  const Spectrum s = herm_eig(herm);
  // herm is PSD up to rounding; eigenvalues below the solver's relative
  // resolution count as exact zeros so sqrt cannot amplify the noise.
  const double floor = kRankFloor * std::max(s.energies[3], 0.0);
  double sum = 0.0, mx = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double e = s.energies[k];
    if (e < -kPsdClipTol)
      throw numeric_error("concurrence: intermediate eigenvalue " +
                          std::to_string(e) + " is negative beyond tolerance");
    const double lam = e <= floor ? 0.0 : std::sqrt(e);
    sum += lam;
    mx = std::max(mx, lam);
  }
  return std::clamp(2.0 * mx - sum, 0.0, 1.0);
}

double concurrence_dz_closed(const DensityMatrix& rho) {
  const Mat4& m = rho.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool in_block = (i == 1 || i == 2) && (j == 1 || j == 2);
      if (!in_block && std::abs(m.a[i][j]) > kHermitianTol)
        throw std::invalid_argument(
            "concurrence_dz_closed: state is not confined to the {|01>, |10>} block");
    }

  // lambda_{3,4} = sqrt(p + q -+ 2 sqrt(p q)) with p the population product
  // and q the squared coherence; that is (sqrt p -+ sqrt q)^2, and the
  // factored form avoids cancelling under the outer sqrt for pure states.
  const double p = (m.a[1][1] * m.a[2][2]).real();
  const double q = (m.a[1][2] * m.a[2][1]).real();
  const double sp = std::sqrt(std::max(p, 0.0));
  const double sq = std::sqrt(std::max(q, 0.0));
  const double l3 = sp + sq;
  const double l4 = std::abs(sp - sq);
  const double mx = std::max(l3, l4);
  return std::max(0.0, 2.0 * mx - (l3 + l4));
}

}  // namespace xyzdm
