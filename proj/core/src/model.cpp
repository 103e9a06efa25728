#include "xyzdm/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xyzdm {

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void require_finite(const ModelParams& p) {
  if (!std::isfinite(p.J) || !std::isfinite(p.gamma) || !std::isfinite(p.Jz) ||
      !std::isfinite(p.D))
    throw std::invalid_argument("model: couplings must be finite");
}
}  // namespace

Mat4 build_hamiltonian(const ModelParams& p) {
  require_finite(p);
  const Mat2 sx = pauli(1), sy = pauli(2), sz = pauli(3);
  Mat4 h = cplx(p.J * (1.0 + p.gamma)) * tensor2(sx, sx) +
           cplx(p.J * (1.0 - p.gamma)) * tensor2(sy, sy) +
           cplx(p.Jz) * tensor2(sz, sz);
  if (p.variant == DmAxis::Z)
    h += cplx(p.D) * (tensor2(sx, sy) - tensor2(sy, sx));
  else
    h += cplx(p.D) * (tensor2(sy, sz) - tensor2(sz, sy));
  return h;
}

Spectrum analytic_spectrum(const ModelParams& p) {
  require_finite(p);
  Spectrum s;
  if (p.variant == DmAxis::Z) {
    const double r = std::hypot(p.J, p.D);
    const cplx chi = r == 0.0 ? cplx(1.0) : cplx(p.J, -p.D) / r;
    s.energies = {p.Jz + 2.0 * p.J * p.gamma, p.Jz - 2.0 * p.J * p.gamma,
                  -p.Jz + 2.0 * r, -p.Jz - 2.0 * r};
    s.vectors[0] = {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    s.vectors[1] = {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
    s.vectors[2] = {0.0, kInvSqrt2, chi * kInvSqrt2, 0.0};
    s.vectors[3] = {0.0, kInvSqrt2, -chi * kInvSqrt2, 0.0};
    return s;
  }

  const double x = p.J * (1.0 - p.gamma) + p.Jz;
  const double big = std::hypot(x, 2.0 * p.D);
  double phi1, phi2;
  if (p.D == 0.0) {
    // 0/0 limits of the arctan forms; the split keeps the pair orthonormal
    // even at the doubly degenerate x = 0 corner.
    phi1 = x >= 0.0 ? std::numbers::pi / 2.0 : 0.0;
    phi2 = x < 0.0 ? std::numbers::pi / 2.0 : 0.0;
  } else {
    // Denominators are strictly positive in exact arithmetic; if one rounds
    // to zero, 2D/0 gives +-inf and atan lands on the correct +-pi/2 limit.
    phi1 = std::atan(2.0 * p.D / (big - x));
    phi2 = std::atan(2.0 * p.D / (big + x));
  }
  const double e0 = -p.J * (1.0 + p.gamma);
  s.energies = {2.0 * p.J - p.Jz, 2.0 * p.J * p.gamma + p.Jz, e0 + big,
                e0 - big};
  s.vectors[0] = {0.0, kInvSqrt2, kInvSqrt2, 0.0};
  s.vectors[1] = {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
  const cplx c1(0.0, std::cos(phi1)), c2(0.0, std::cos(phi2));
  const double s1 = std::sin(phi1), s2 = std::sin(phi2);
  s.vectors[2] = {s1 * kInvSqrt2, -c1 * kInvSqrt2, c1 * kInvSqrt2,
                  -s1 * kInvSqrt2};
  s.vectors[3] = {s2 * kInvSqrt2, c2 * kInvSqrt2, -c2 * kInvSqrt2,
                  -s2 * kInvSqrt2};
  return s;
}

}  // namespace xyzdm
