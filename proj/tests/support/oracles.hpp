#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "xyzdm/density.hpp"
#include "xyzdm/matrix.hpp"

// Test-side oracles. Everything here is deliberately written the slow,
// literal way and shares no algorithm with the library: eigenvalues come
// from the characteristic polynomial instead of Jacobi rotations, and the
// teleportation sum carries its own hand-typed Pauli and Bell tables.
namespace testsupport {

using xyzdm::cplx;
using xyzdm::Mat2;
using xyzdm::Mat4;
using xyzdm::Vec4;

// All four roots of det(m - x I), via the Faddeev-LeVerrier recurrence for
// the characteristic polynomial and Durand-Kerner iteration for its roots.
// Works on arbitrary complex matrices. Accuracy is ~1e-12 for well separated
// roots and degrades to ~|noise|^(1/k) inside a k-fold cluster, so callers
// guard conditioning themselves.
std::array<cplx, 4> charpoly_eigs(const Mat4& m);

// Textbook concurrence evaluated the literal way: eigenvalues of the
// non-Hermitian product rho * (sy(x)sy) rho^* (sy(x)sy), square roots of the
// clipped real parts, max(0, 2 max - sum). Trustworthy only when that
// product's spectrum is simple; see charpoly_eigs.
double brute_concurrence(const Mat4& rho);

// True when charpoly_eigs(R) for the concurrence product R of rho has all
// roots real-ish, separated by at least `gap`, and at least `floor` above
// zero, i.e. brute_concurrence(rho) can be trusted to ~1e-9.
bool brute_concurrence_is_conditioned(const Mat4& rho, double gap, double floor);

// Literal 16-term two-copy teleportation sum with its own Pauli correction
// and Bell tables, entry by entry. psi_in must be unit. Returns the raw sum.
Mat4 naive_teleport_sum(const Mat4& rho_a, const Mat4& rho_b, const Vec4& psi_in);

// tr(E_k rho) against the same hand-typed Bell table.
std::array<double, 4> naive_bell_weights(const Mat4& rho);

// Deterministic draws on top of mt19937_64 without the library-defined
// distributions, so sequences are identical across standard libraries.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi);
  cplx unit_phase();                    // e^{i u}
  Vec4 ket();                           // unit 4-vector
  Mat2 su2();                           // 2x2 unitary, exact to rounding
  Mat4 hermitian(double scale);         // random Hermitian
  xyzdm::DensityMatrix density();       // full-rank mixed state
  xyzdm::DensityMatrix block_density(); // supported on span{|01>, |10>}

 private:
  std::mt19937_64 gen_;
};

}  // namespace testsupport
