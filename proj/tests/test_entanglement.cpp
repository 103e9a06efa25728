#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "xyzdm/density.hpp"
#include "xyzdm/dynamics.hpp"
#include "xyzdm/entanglement.hpp"
#include "xyzdm/model.hpp"

using namespace xyzdm;
using testsupport::TestRng;

namespace {

const double kInv2 = std::sqrt(0.5);

DensityMatrix bell_plus() { return DensityMatrix::pure(Vec4{0.0, kInv2, kInv2, 0.0}); }
DensityMatrix bell_minus() { return DensityMatrix::pure(Vec4{0.0, kInv2, -kInv2, 0.0}); }
DensityMatrix ket10() { return DensityMatrix::pure(Vec4{0.0, 0.0, 1.0, 0.0}); }
DensityMatrix maximally_mixed() {
  return DensityMatrix::from_matrix(cplx(0.25) * Mat4::identity());
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("spin_flip fixes the maximally mixed state and Bell states") {
  CHECK(spin_flip(maximally_mixed()).max_abs_diff(maximally_mixed().matrix()) == 0.0);
  CHECK(spin_flip(bell_plus()).max_abs_diff(bell_plus().matrix()) == 0.0);
}

TEST_CASE("spin_flip swaps the antiparallel basis projectors") {
  Mat4 expect;
  expect(1, 1) = 1.0;
  CHECK(spin_flip(ket10()).max_abs_diff(expect) == 0.0);
}

TEST_CASE("concurrence scores the textbook states") {
  CHECK(std::abs(concurrence(bell_plus()) - 1.0) <= 1e-12);
  CHECK(concurrence(ket10()) <= 1e-15);
  CHECK(concurrence(maximally_mixed()) == 0.0);
}

TEST_CASE("concurrence of a two-projector mixture tracks the block coherence") {
  const Mat4 m = cplx(0.8) * bell_plus().matrix() + cplx(0.2) * bell_minus().matrix();
  const DensityMatrix rho = DensityMatrix::from_matrix(m);
  CHECK(std::abs(concurrence(rho) - 0.6) <= 1e-12);
}

TEST_CASE("concurrence of an antiparallel superposition is the doubled cross term") {
  for (const double a : {0.0, 0.3, std::numbers::pi / 4.0, 1.1, 2.0, std::numbers::pi}) {
    const DensityMatrix rho =
        DensityMatrix::pure(Vec4{0.0, std::cos(a), std::sin(a), 0.0});
    CHECK(std::abs(concurrence(rho) - std::abs(std::sin(2.0 * a))) <= 1e-10);
  }
}

TEST_CASE("concurrence of any pure state is twice the determinant cross term") {
  TestRng rng(401);
  for (int d = 0; d < 20; ++d) {
    const Vec4 v = rng.ket();
    const double expect = 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
    CHECK(std::abs(concurrence(DensityMatrix::pure(v)) - expect) <= 1e-10);
  }
}

TEST_CASE("concurrence is invariant under local unitaries") {
  TestRng rng(402);
  for (int d = 0; d < 15; ++d) {
    const DensityMatrix rho = rng.density();
    const Mat4 u = tensor2(rng.su2(), rng.su2());
    const DensityMatrix rotated = DensityMatrix::from_matrix(u * rho.matrix() * u.dagger());
    CHECK(std::abs(concurrence(rotated) - concurrence(rho)) <= 1e-9);
  }
}

TEST_CASE("concurrence stays inside the unit interval and is convex") {
  TestRng rng(403);
  for (int d = 0; d < 15; ++d) {
    const DensityMatrix a = rng.density();
    const DensityMatrix b = rng.density();
    const double p = rng.uniform(0.0, 1.0);
    const DensityMatrix mix =
        DensityMatrix::from_matrix(cplx(p) * a.matrix() + cplx(1.0 - p) * b.matrix());
    const double ca = concurrence(a);
    const double cb = concurrence(b);
    const double cm = concurrence(mix);
    CHECK(ca >= 0.0);
    CHECK(ca <= 1.0);
    CHECK(cm <= p * ca + (1.0 - p) * cb + 1e-9);
  }
}

TEST_CASE("concurrence matches a characteristic-polynomial evaluation") {
  TestRng rng(404);
  int accepted = 0;
  for (int d = 0; d < 30; ++d) {
    const DensityMatrix rho = rng.density();
    if (!testsupport::brute_concurrence_is_conditioned(rho.matrix(), 1e-3, 1e-4))
      continue;
    ++accepted;
    CHECK(std::abs(concurrence(rho) - testsupport::brute_concurrence(rho.matrix())) <= 1e-8);
  }
  REQUIRE(accepted >= 8);
}

TEST_CASE("the block closed form scores the textbook states") {
  CHECK(std::abs(concurrence_dz_closed(bell_plus()) - 1.0) <= 1e-12);
  const Mat4 half = cplx(0.5) * (ket10().matrix() +
                                 DensityMatrix::pure(Vec4{0.0, 1.0, 0.0, 0.0}).matrix());
  CHECK(concurrence_dz_closed(DensityMatrix::from_matrix(half)) <= 1e-15);
}

TEST_CASE("the block closed form equals the generic path on its domain") {
  TestRng rng(405);
  for (int d = 0; d < 15; ++d) {
    const DensityMatrix rho = rng.block_density();
    CHECK(std::abs(concurrence_dz_closed(rho) - concurrence(rho)) <= 1e-9);
  }
}

TEST_CASE("the block closed form tracks a confined trajectory") {
  const Spectrum s = analytic_spectrum({DmAxis::Z, 1.0, 0.2, 2.0, 0.5});
  const DensityMatrix rho0 = initial_state({StateFamily::Antiparallel, 0.9});
  for (const double t : {0.0, 1.0, 5.0, 40.0}) {
    const DensityMatrix rho = evolve(s, rho0, {0.02, t});
    CHECK(std::abs(concurrence_dz_closed(rho) - concurrence(rho)) <= 1e-9);
  }
}

TEST_CASE("the block closed form rejects states leaking out of the block") {
  CHECK_THROWS_AS(concurrence_dz_closed(maximally_mixed()), std::invalid_argument);
  CHECK_THROWS_AS(
      concurrence_dz_closed(DensityMatrix::pure(Vec4{std::cos(0.4), 0.0, 0.0, std::sin(0.4)})),
      std::invalid_argument);
}

}  // TEST_SUITE
