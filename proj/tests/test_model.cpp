#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "support/oracles.hpp"
#include "xyzdm/eig.hpp"
#include "xyzdm/matrix.hpp"
#include "xyzdm/model.hpp"

using namespace xyzdm;
using testsupport::TestRng;

namespace {

double max_residual(const Mat4& h, const Spectrum& s) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Vec4 hv = mat_vec(h, s.vectors[k]);
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(hv[i] - s.energies[k] * s.vectors[k][i]));
  }
  return worst;
}

double ket_diff(const Vec4& a, const Vec4& b) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

ModelParams random_params(TestRng& rng, DmAxis variant) {
  ModelParams p;
  p.variant = variant;
  p.J = rng.uniform(-3.0, 3.0);
  p.gamma = rng.uniform(-3.0, 3.0);
  p.Jz = rng.uniform(-3.0, 3.0);
  p.D = rng.uniform(-3.0, 3.0);
  return p;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("build_hamiltonian is zero for zero couplings") {
  CHECK(build_hamiltonian({DmAxis::Z, 0.0, 0.0, 0.0, 0.0}).max_abs_diff(Mat4::zero()) == 0.0);
}

TEST_CASE("build_hamiltonian reduces to the isotropic exchange block") {
  const Mat4 h = build_hamiltonian({DmAxis::Z, 1.0, 0.0, 0.0, 0.0});
  Mat4 expect;
  expect(1, 2) = 2.0;
  expect(2, 1) = 2.0;
  CHECK(h.max_abs_diff(expect) <= 1e-15);
}

TEST_CASE("build_hamiltonian assembles the z-axis matrix entry by entry") {
  const double J = 1.0, g = 0.2, Jz = 1.0, D = 2.0;
  const Mat4 h = build_hamiltonian({DmAxis::Z, J, g, Jz, D});
  Mat4 expect;
  expect(0, 0) = Jz;
  expect(1, 1) = -Jz;
  expect(2, 2) = -Jz;
  expect(3, 3) = Jz;
  expect(0, 3) = 2.0 * J * g;
  expect(3, 0) = 2.0 * J * g;
  expect(1, 2) = cplx(2.0 * J, 2.0 * D);
  expect(2, 1) = cplx(2.0 * J, -2.0 * D);
  CHECK(h.max_abs_diff(expect) <= 1e-14);
  CHECK(h.hermiticity_defect() == 0.0);
}

TEST_CASE("build_hamiltonian assembles the x-axis matrix entry by entry") {
  const double J = 1.0, g = 0.3, Jz = 0.7, D = 1.1;
  const Mat4 h = build_hamiltonian({DmAxis::X, J, g, Jz, D});
  Mat4 expect;
  expect(0, 0) = Jz;
  expect(1, 1) = -Jz;
  expect(2, 2) = -Jz;
  expect(3, 3) = Jz;
  expect(0, 3) = 2.0 * J * g;
  expect(3, 0) = 2.0 * J * g;
  expect(1, 2) = 2.0 * J;
  expect(2, 1) = 2.0 * J;
  expect(0, 1) = cplx(0.0, D);
  expect(1, 0) = cplx(0.0, -D);
  expect(0, 2) = cplx(0.0, -D);
  expect(2, 0) = cplx(0.0, D);
  expect(1, 3) = cplx(0.0, D);
  expect(3, 1) = cplx(0.0, -D);
  expect(2, 3) = cplx(0.0, -D);
  expect(3, 2) = cplx(0.0, D);
  CHECK(h.max_abs_diff(expect) <= 1e-14);
  CHECK(h.hermiticity_defect() == 0.0);
}

TEST_CASE("build_hamiltonian rejects non-finite couplings") {
  CHECK_THROWS_AS(build_hamiltonian({DmAxis::Z, std::nan(""), 0.0, 0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("analytic_spectrum pins the z-axis labeling, energies, and kets") {
  const ModelParams p{DmAxis::Z, 1.0, 0.2, 1.0, 2.0};
  const Spectrum s = analytic_spectrum(p);
  const double r = std::hypot(p.J, p.D);
  CHECK(std::abs(s.energies[0] - 1.4) <= 1e-12);
  CHECK(std::abs(s.energies[1] - 0.6) <= 1e-12);
  CHECK(std::abs(s.energies[2] - (-1.0 + 2.0 * r)) <= 1e-12);
  CHECK(std::abs(s.energies[3] - (-1.0 - 2.0 * r)) <= 1e-12);

  const double k = std::sqrt(0.5);
  const cplx chi = cplx(p.J, -p.D) / r;
  CHECK(ket_diff(s.vectors[0], Vec4{k, 0.0, 0.0, k}) <= 1e-12);
  CHECK(ket_diff(s.vectors[1], Vec4{k, 0.0, 0.0, -k}) <= 1e-12);
  CHECK(ket_diff(s.vectors[2], Vec4{0.0, k, k * chi, 0.0}) <= 1e-12);
  CHECK(ket_diff(s.vectors[3], Vec4{0.0, k, -k * chi, 0.0}) <= 1e-12);

  CHECK(s.is_orthonormal());
  CHECK(max_residual(build_hamiltonian(p), s) <= 1e-10);
}

TEST_CASE("analytic_spectrum pins the x-axis energies") {
  const ModelParams p{DmAxis::X, 1.0, 0.2, 1.0, 2.0};
  const Spectrum s = analytic_spectrum(p);
  const double x = p.J * (1.0 - p.gamma) + p.Jz;
  const double big = std::hypot(x, 2.0 * p.D);
  CHECK(std::abs(s.energies[0] - 1.0) <= 1e-12);
  CHECK(std::abs(s.energies[1] - 1.4) <= 1e-12);
  CHECK(std::abs(s.energies[2] - (-1.2 + big)) <= 1e-12);
  CHECK(std::abs(s.energies[3] - (-1.2 - big)) <= 1e-12);
  CHECK(std::abs(big - std::sqrt(19.24)) <= 1e-12);

  const double k = std::sqrt(0.5);
  CHECK(ket_diff(s.vectors[0], Vec4{0.0, k, k, 0.0}) <= 1e-12);
  CHECK(ket_diff(s.vectors[1], Vec4{k, 0.0, 0.0, k}) <= 1e-12);

  CHECK(s.is_orthonormal());
  CHECK(max_residual(build_hamiltonian(p), s) <= 1e-10);
}

TEST_CASE("analytic_spectrum stays orthonormal in the degenerate z limit") {
  const ModelParams p{DmAxis::Z, 1.0, 0.0, 0.0, 0.0};
  const Spectrum s = analytic_spectrum(p);
  CHECK(std::abs(s.energies[0]) <= 1e-15);
  CHECK(std::abs(s.energies[1]) <= 1e-15);
  CHECK(std::abs(s.energies[2] - 2.0) <= 1e-15);
  CHECK(std::abs(s.energies[3] + 2.0) <= 1e-15);
  const double k = std::sqrt(0.5);
  CHECK(ket_diff(s.vectors[2], Vec4{0.0, k, k, 0.0}) <= 1e-15);
  CHECK(ket_diff(s.vectors[3], Vec4{0.0, k, -k, 0.0}) <= 1e-15);
  CHECK(s.is_orthonormal());
}

TEST_CASE("analytic_spectrum resolves the z-axis phase when J and D vanish") {
  const Spectrum s = analytic_spectrum({DmAxis::Z, 0.0, 0.5, 1.2, 0.0});
  CHECK(s.is_orthonormal());
  CHECK(max_residual(build_hamiltonian({DmAxis::Z, 0.0, 0.5, 1.2, 0.0}), s) <= 1e-10);
}

TEST_CASE("analytic_spectrum resolves the x-axis mixing angles when D vanishes") {
  for (const ModelParams p : {ModelParams{DmAxis::X, 1.0, 0.0, 1.0, 0.0},
                              ModelParams{DmAxis::X, -1.0, 0.0, -1.0, 0.0}}) {
    const Spectrum s = analytic_spectrum(p);
    CHECK(s.is_orthonormal());
    CHECK(max_residual(build_hamiltonian(p), s) <= 1e-10);
  }
}

TEST_CASE("analytic_spectrum agrees with herm_eig on random couplings") {
  TestRng rng(201);
  for (int d = 0; d < 50; ++d) {
    const ModelParams p = random_params(rng, d % 2 ? DmAxis::X : DmAxis::Z);
    const Mat4 h = build_hamiltonian(p);
    const Spectrum analytic = analytic_spectrum(p);
    const Spectrum numeric = herm_eig(h);
    std::array<double, 4> sorted = analytic.energies;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(sorted[k] - numeric.energies[k]) <= 1e-10);
    CHECK(max_residual(h, analytic) <= 1e-10);
    CHECK(analytic.is_orthonormal());
  }
}

TEST_CASE("analytic energies match characteristic-polynomial roots") {
  const ModelParams p{DmAxis::Z, 1.0, 0.2, 1.0, 2.0};
  auto roots = testsupport::charpoly_eigs(build_hamiltonian(p));
  std::array<double, 4> re{};
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(roots[k].imag()) <= 1e-8);
    re[k] = roots[k].real();
  }
  std::sort(re.begin(), re.end());
  std::array<double, 4> expect = analytic_spectrum(p).energies;
  std::sort(expect.begin(), expect.end());
  for (int k = 0; k < 4; ++k) CHECK(std::abs(re[k] - expect[k]) <= 1e-8);
}

}  // TEST_SUITE
