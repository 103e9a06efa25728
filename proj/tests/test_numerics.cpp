#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "support/oracles.hpp"
#include "xyzdm/density.hpp"
#include "xyzdm/eig.hpp"
#include "xyzdm/errors.hpp"
#include "xyzdm/matrix.hpp"

using namespace xyzdm;
using testsupport::TestRng;

namespace {

// Two uncoupled 2x2 blocks with known eigenvalues 1 +- 0.4 and -1 +- 2 sqrt 5.
Mat4 two_block_example() {
  Mat4 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  m(2, 2) = -1.0;
  m(3, 3) = 1.0;
  m(0, 3) = 0.4;
  m(3, 0) = 0.4;
  m(1, 2) = cplx(2.0, 4.0);
  m(2, 1) = cplx(2.0, -4.0);
  return m;
}

double residual(const Mat4& m, const Spectrum& s, int k) {
  const Vec4 hv = mat_vec(m, s.vectors[k]);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    worst = std::max(worst, std::abs(hv[i] - s.energies[k] * s.vectors[k][i]));
  return worst;
}

Mat2 random_mat2(TestRng& rng) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return m;
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("herm_eig solves a two-block matrix with ascending energies") {
  const Mat4 m = two_block_example();
  const Spectrum s = herm_eig(m);
  const double r5 = std::sqrt(5.0);
  CHECK(std::abs(s.energies[0] - (-1.0 - 2.0 * r5)) <= 1e-10);
  CHECK(std::abs(s.energies[1] - 0.6) <= 1e-10);
  CHECK(std::abs(s.energies[2] - 1.4) <= 1e-10);
  CHECK(std::abs(s.energies[3] - (-1.0 + 2.0 * r5)) <= 1e-10);
  CHECK(s.is_orthonormal());
  for (int k = 0; k < 4; ++k) CHECK(residual(m, s, k) <= 1e-10);
  CHECK(s.reconstruct().max_abs_diff(m) <= 1e-9);
}

TEST_CASE("herm_eig reconstructs random Hermitian inputs") {
  TestRng rng(101);
  for (int d = 0; d < 30; ++d) {
    const Mat4 m = rng.hermitian(3.0);
    const Spectrum s = herm_eig(m);
    CHECK(s.is_orthonormal());
    CHECK(std::is_sorted(s.energies.begin(), s.energies.end()));
    CHECK(s.reconstruct().max_abs_diff(m) <= 1e-9);
  }
}

TEST_CASE("herm_eig energies match characteristic-polynomial roots") {
  TestRng rng(102);
  for (int d = 0; d < 25; ++d) {
    const Mat4 m = rng.hermitian(2.0);
    const Spectrum s = herm_eig(m);
    auto roots = testsupport::charpoly_eigs(m);
    std::array<double, 4> re{};
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(roots[k].imag()) <= 1e-7);
      re[k] = roots[k].real();
    }
    std::sort(re.begin(), re.end());
    for (int k = 0; k < 4; ++k) CHECK(std::abs(re[k] - s.energies[k]) <= 1e-7);
  }
}

TEST_CASE("herm_eig energies are invariant under unitary conjugation") {
  TestRng rng(103);
  for (int d = 0; d < 10; ++d) {
    const Mat4 m = rng.hermitian(2.0);
    const Spectrum basis = herm_eig(rng.hermitian(1.0));
    Mat4 u;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) u(i, k) = basis.vectors[k][i];
    const Spectrum a = herm_eig(m);
    const Spectrum b = herm_eig(u * m * u.dagger());
    for (int k = 0; k < 4; ++k) CHECK(std::abs(a.energies[k] - b.energies[k]) <= 1e-9);
  }
}

TEST_CASE("herm_eig gives a degenerate identity the lex-sorted coordinate basis") {
  const Spectrum s = herm_eig(Mat4::identity());
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(s.energies[k] - 1.0) <= 1e-14);
    // inside a degenerate cluster vectors sort lexicographically, so the
    // basis comes out as e3, e2, e1, e0
    CHECK(s.vectors[k][3 - k] == cplx(1.0));
  }
}

TEST_CASE("herm_eig rejects a non-Hermitian matrix") {
  Mat4 m = Mat4::identity();
  m(0, 1) = 1e-3;
  CHECK_THROWS_AS(herm_eig(m), numeric_error);
}

TEST_CASE("psd_sqrt of a diagonal matrix takes entrywise square roots") {
  Mat4 m;
  m(0, 0) = 4.0;
  m(1, 1) = 1.0;
  m(2, 2) = 0.0;
  m(3, 3) = 9.0;
  Mat4 expect;
  expect(0, 0) = 2.0;
  expect(1, 1) = 1.0;
  expect(2, 2) = 0.0;
  expect(3, 3) = 3.0;
  CHECK(psd_sqrt(m).max_abs_diff(expect) <= 1e-12);
}

TEST_CASE("psd_sqrt squares back to the input on PSD matrices") {
  TestRng rng(104);
  for (int d = 0; d < 20; ++d) {
    Mat4 a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        a(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const Mat4 m = a.dagger() * a;
    const Mat4 r = psd_sqrt(m);
    CHECK((r * r).max_abs_diff(m) <= 1e-9);
    CHECK(r.hermiticity_defect() <= 1e-12);
  }
}

TEST_CASE("psd_sqrt rejects an indefinite matrix") {
  Mat4 m = Mat4::identity();
  m(3, 3) = -1.0;
  CHECK_THROWS_AS(psd_sqrt(m), numeric_error);
}

TEST_CASE("tensor2 reproduces the Pauli tensor tables") {
  const Mat4 zz = tensor2(pauli(3), pauli(3));
  Mat4 zz_expect;
  zz_expect(0, 0) = 1.0;
  zz_expect(1, 1) = -1.0;
  zz_expect(2, 2) = -1.0;
  zz_expect(3, 3) = 1.0;
  CHECK(zz.max_abs_diff(zz_expect) == 0.0);

  const Mat4 yy = tensor2(pauli(2), pauli(2));
  Mat4 yy_expect;
  yy_expect(0, 3) = -1.0;
  yy_expect(1, 2) = 1.0;
  yy_expect(2, 1) = 1.0;
  yy_expect(3, 0) = -1.0;
  CHECK(yy.max_abs_diff(yy_expect) == 0.0);
}

TEST_CASE("tensor2 satisfies the mixed-product rule") {
  TestRng rng(105);
  for (int d = 0; d < 10; ++d) {
    const Mat2 a = random_mat2(rng);
    const Mat2 b = random_mat2(rng);
    const Mat2 c = random_mat2(rng);
    const Mat2 e = random_mat2(rng);
    const Mat4 lhs = tensor2(a, b) * tensor2(c, e);
    const Mat4 rhs = tensor2(a * c, b * e);
    CHECK(lhs.max_abs_diff(rhs) <= 1e-14);
  }
}

TEST_CASE("pauli rejects an out-of-range index") {
  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
  CHECK_THROWS_AS(pauli(-1), std::invalid_argument);
}

TEST_CASE("from_matrix stores a clean density matrix bit for bit") {
  const Mat4 m = cplx(0.25) * Mat4::identity();
  CHECK(DensityMatrix::from_matrix(m).matrix().max_abs_diff(m) == 0.0);
}

TEST_CASE("from_matrix rejects non-Hermitian, traceless, and indefinite input") {
  Mat4 skew = cplx(0.25) * Mat4::identity();
  skew(0, 1) = 1e-3;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(skew), numeric_error);

  Mat4 overweight;
  overweight(0, 0) = 0.5;
  overweight(1, 1) = 0.5;
  overweight(2, 2) = 0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(overweight), numeric_error);

  Mat4 indefinite;
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(indefinite), numeric_error);
}

TEST_CASE("from_matrix clips an eigenvalue inside the rounding band") {
  Mat4 m;
  m(0, 0) = 1.0 + 5e-10;
  m(1, 1) = -5e-10;
  const DensityMatrix rho = DensityMatrix::from_matrix(m);
  CHECK(rho.population(1) == 0.0);
  CHECK(std::abs(rho.population(0) - (1.0 + 5e-10)) <= 1e-15);
}

TEST_CASE("pure normalizes its vector and rejects zero") {
  const DensityMatrix rho = DensityMatrix::pure(Vec4{2.0, 0.0, 0.0, 0.0});
  Mat4 expect;
  expect(0, 0) = 1.0;
  CHECK(rho.matrix().max_abs_diff(expect) == 0.0);
  CHECK(std::abs(rho.purity() - 1.0) <= 1e-15);
  CHECK_THROWS_AS(DensityMatrix::pure(Vec4{}), std::invalid_argument);
}

TEST_CASE("purity and population report the mixture structure") {
  const DensityMatrix mixed = DensityMatrix::from_matrix(cplx(0.25) * Mat4::identity());
  CHECK(mixed.purity() == 0.25);
  CHECK(mixed.population(2) == 0.25);
  CHECK_THROWS_AS(mixed.population(4), std::invalid_argument);
  CHECK_THROWS_AS(mixed.population(-1), std::invalid_argument);
}

}  // TEST_SUITE
