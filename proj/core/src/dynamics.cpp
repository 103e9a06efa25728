#include "xyzdm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "xyzdm/errors.hpp"

namespace xyzdm {

namespace {

void require_evolution_params(const EvolutionParams& ev) {
  if (!(ev.Gamma >= 0.0) || !std::isfinite(ev.Gamma))
    throw std::invalid_argument("dynamics: Gamma must be finite and >= 0");
  if (!(ev.t >= 0.0) || !std::isfinite(ev.t))
    throw std::invalid_argument("dynamics: t must be finite and >= 0");
}

void require_orthonormal(const Spectrum& spec) {
  if (!spec.is_orthonormal())
    throw numeric_error("dynamics: spectrum basis is not orthonormal");
}

// <psi_m|rho|psi_n> for all pairs. Exact zeros in rho and in the basis
// vectors propagate, which is what confines block dynamics bit-exactly.
Mat4 to_eigenbasis(const Spectrum& spec, const Mat4& rho) {
  Mat4 c;
  for (int m = 0; m < 4; ++m) {
    const Vec4 rv = mat_vec(rho, spec.vectors[m]);
    for (int n = 0; n < 4; ++n) c.a[n][m] = dot(spec.vectors[n], rv);
  }
  return c;
}

Mat4 from_eigenbasis(const Spectrum& spec, const Mat4& g) {
  Mat4 out;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const cplx w = g.a[m][n];
      if (w == 0.0) continue;
      for (int i = 0; i < 4; ++i) {
        const cplx vi = spec.vectors[m][i];
        if (vi == 0.0) continue;
        for (int j = 0; j < 4; ++j)
          out.a[i][j] += w * vi * std::conj(spec.vectors[n][j]);
      }
    }
  return out;
}

}  // namespace

Vec4 initial_ket(const InitialStateSpec& s) {
  if (!std::isfinite(s.alpha))
    throw std::invalid_argument("dynamics: alpha must be finite");
  const double c = std::cos(s.alpha), sn = std::sin(s.alpha);
  if (s.family == StateFamily::Antiparallel) return {0.0, c, sn, 0.0};
  return {c, 0.0, 0.0, sn};
}

DensityMatrix initial_state(const InitialStateSpec& s) {
  return DensityMatrix::pure(initial_ket(s));
}

DensityMatrix evolve(const Spectrum& spec, const DensityMatrix& rho0,
                     const EvolutionParams& ev) {
  require_evolution_params(ev);
  require_orthonormal(spec);
  Mat4 g = to_eigenbasis(spec, rho0.matrix());
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      if (m == n) continue;  // factor is exactly 1
      const double d = spec.energies[m] - spec.energies[n];
      if (d == 0.0) continue;
      g.a[m][n] *= std::exp(cplx(-0.5 * ev.Gamma * ev.t * d * d, -d * ev.t));
    }
  return DensityMatrix::from_matrix(from_eigenbasis(spec, g));
}

DensityMatrix evolve_ode_oracle(const Mat4& h, const DensityMatrix& rho0,
                                const EvolutionParams& ev, double dt,
                                long long max_steps) {
  require_evolution_params(ev);
  if (ev.t == 0.0) return rho0;
  if (!(dt > 0.0) || !std::isfinite(dt) || dt > ev.t)
    throw std::invalid_argument("dynamics: oracle needs 0 < dt <= t");
  if (h.hermiticity_defect() > kHermitianTol)
    throw numeric_error("dynamics: oracle Hamiltonian is not Hermitian");

  // Uniform partition with the round-up guarded against dt exactly dividing t.
  const double raw = ev.t / dt;
  long long steps = static_cast<long long>(std::ceil(raw * (1.0 - 1e-12)));
  if (steps < 1) steps = 1;
  if (steps > max_steps)
    throw validation_error("dynamics: oracle step count " +
                           std::to_string(steps) + " exceeds cap " +
                           std::to_string(max_steps));
  const double step = ev.t / static_cast<double>(steps);

  const cplx minus_i(0.0, -1.0);
  const cplx half_gamma(0.5 * ev.Gamma);
  auto deriv = [&](const Mat4& r) {
    const Mat4 c1 = h * r - r * h;
    const Mat4 c2 = h * c1 - c1 * h;
    return minus_i * c1 - half_gamma * c2;
  };

  Mat4 r = rho0.matrix();
  const cplx h2(step / 2.0), h6(step / 6.0);
  for (long long k = 0; k < steps; ++k) {
    const Mat4 k1 = deriv(r);
    const Mat4 k2 = deriv(r + h2 * k1);
    const Mat4 k3 = deriv(r + h2 * k2);
    const Mat4 k4 = deriv(r + cplx(step) * k3);
    r += h6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return DensityMatrix::from_matrix(r);
}

std::array<cplx, 2> closed_form_dz_factors(const ModelParams& p,
                                           const EvolutionParams& ev) {
  if (p.variant != DmAxis::Z)
    throw std::invalid_argument("dynamics: closed form exists only for the Z variant");
  require_evolution_params(ev);
  const double de = 4.0 * std::hypot(p.J, p.D);  // E_3 - E_4
  const cplx eta = std::exp(cplx(-0.5 * ev.t * de * ev.Gamma * de, -ev.t * de));
  const cplx xi = std::exp(cplx(-0.5 * ev.t * de * ev.Gamma * de, ev.t * de));
  return {eta, xi};
}

Mat4 closed_form_dz(const ModelParams& p, double alpha,
                    const EvolutionParams& ev) {
  const auto [eta, xi] = closed_form_dz_factors(p, ev);
  const double r = std::hypot(p.J, p.D);
  const cplx chi = r == 0.0 ? cplx(1.0) : cplx(p.J, -p.D) / r;
  const cplx chi2 = chi * chi;
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const cplx mix = ca + chi * sa;

  // Printed entries, transcribed one-to-one; rows/columns over
  // (|00>, |01>, |10>, |11>) with the |11> row and column identically zero.
  Mat4 m;
  m.a[0][0] = chi2 * (ca * ca) / 4.0;
  m.a[1][1] = chi2 * mix * mix / 4.0;
  m.a[2][2] = (ca * mix * (2.0 + eta + xi) + chi2 * (sa * sa)) / 4.0;
  m.a[1][0] = -(chi2 * eta / 4.0) * ca * mix;
  m.a[2][0] = -(chi * ca / 4.0) * (ca + eta * chi * sa + eta * ca);
  m.a[0][1] = -(xi * chi2 * ca / 4.0) * mix;
  m.a[0][2] = -(chi * ca / 4.0) * (ca + xi * chi * sa + xi * ca);
  m.a[2][1] = (chi / 4.0) * mix * (mix + xi * ca);
  m.a[1][2] = (chi / 4.0) * mix * (mix + eta * ca);
  return m;
}

namespace {

DensityMatrix asymptotic_impl(const Spectrum& spec, const DensityMatrix& rho0,
                              double tol) {
  require_orthonormal(spec);
  Mat4 g = to_eigenbasis(spec, rho0.matrix());
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      if (std::abs(spec.energies[m] - spec.energies[n]) > tol) g.a[m][n] = 0.0;
  return DensityMatrix::from_matrix(from_eigenbasis(spec, g));
}

double default_degeneracy_tol(const Spectrum& spec) {
  double mx = 0.0;
  for (double e : spec.energies) mx = std::max(mx, std::abs(e));
  return 1e-9 * mx;
}

}  // namespace

DensityMatrix asymptotic_state(const Spectrum& spec, const DensityMatrix& rho0) {
  return asymptotic_impl(spec, rho0, default_degeneracy_tol(spec));
}

DensityMatrix asymptotic_state(const Spectrum& spec, const DensityMatrix& rho0,
                               double degeneracy_tol) {
  if (!(degeneracy_tol > 0.0) || !std::isfinite(degeneracy_tol))
    throw std::invalid_argument("dynamics: degeneracy_tol must be positive");
  return asymptotic_impl(spec, rho0, degeneracy_tol);
}

double decoherence_time(const Spectrum& spec, double Gamma) {
  if (!(Gamma > 0.0))
    return std::numeric_limits<double>::infinity();
  const double tol = default_degeneracy_tol(spec);
  double min_sq = std::numeric_limits<double>::infinity();
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) {
      const double d = std::abs(spec.energies[m] - spec.energies[n]);
      if (d > tol) min_sq = std::min(min_sq, d * d);
    }
  if (!std::isfinite(min_sq)) return std::numeric_limits<double>::infinity();
  return 12.0 * std::log(10.0) / (Gamma * min_sq);
}

}  // namespace xyzdm
