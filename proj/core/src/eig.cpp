#include "xyzdm/eig.hpp"

#include <algorithm>
#include <cmath>

#include "xyzdm/errors.hpp"

namespace xyzdm {

namespace {

// Off-diagonal Frobenius mass, the quantity Jacobi drives to zero.
double off_diag_norm(const Mat4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += std::norm(m.a[i][j]);
  return std::sqrt(s);
}

// One complex Jacobi rotation in the (p,q) plane, chosen to annihilate a_pq.
// Writing a_pq = b e^{i phi} and mu = (a_pp - a_qq)/(2b), the tangent
// t = -sign(mu)/(|mu| + sqrt(mu^2 + 1)) is the smaller root of
// t^2 - 2 mu t - 1 = 0; the small root keeps every rotation angle <= pi/4,
// which is what makes the cyclic sweep monotone.
void rotate(Mat4& m, Mat4& v, int p, int q) {
  const cplx apq = m.a[p][q];
  if (apq == 0.0) return;  // structural zeros stay untouched
  const double b = std::abs(apq);
  const cplx phase = apq / b;
  const double mu = (m.a[p][p].real() - m.a[q][q].real()) / (2.0 * b);
  const double t =
      (mu >= 0.0 ? -1.0 : 1.0) / (std::abs(mu) + std::sqrt(mu * mu + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx s = (t * c) * phase;
  const cplx sc = std::conj(s);

  for (int k = 0; k < 4; ++k) {  // columns p, q of M <- M J
    const cplx mkp = m.a[k][p];
    const cplx mkq = m.a[k][q];
    m.a[k][p] = c * mkp - sc * mkq;
    m.a[k][q] = s * mkp + c * mkq;
  }
  for (int k = 0; k < 4; ++k) {  // rows p, q of M <- J^dag M
    const cplx mpk = m.a[p][k];
    const cplx mqk = m.a[q][k];
    m.a[p][k] = c * mpk - s * mqk;
    m.a[q][k] = sc * mpk + c * mqk;
  }
  m.a[p][q] = 0.0;  // annihilated by construction; drop the fp residue
  m.a[q][p] = 0.0;
  m.a[p][p] = cplx(m.a[p][p].real(), 0.0);
  m.a[q][q] = cplx(m.a[q][q].real(), 0.0);

  for (int k = 0; k < 4; ++k) {  // accumulate V <- V J
    const cplx vkp = v.a[k][p];
    const cplx vkq = v.a[k][q];
    v.a[k][p] = c * vkp - sc * vkq;
    v.a[k][q] = s * vkp + c * vkq;
  }
}

bool lex_less(const Vec4& x, const Vec4& y) {
  for (int r = 0; r < 4; ++r) {
    if (x[r].real() != y[r].real()) return x[r].real() < y[r].real();
    if (x[r].imag() != y[r].imag()) return x[r].imag() < y[r].imag();
  }
  return false;
}

}  // namespace

double Spectrum::orthonormality_defect() const {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx g = dot(vectors[i], vectors[j]);
      d = std::max(d, std::abs(g - (i == j ? cplx(1.0) : cplx(0.0))));
    }
  return d;
}

bool Spectrum::is_orthonormal(double tol) const {
  return orthonormality_defect() <= tol;
}

Mat4 Spectrum::reconstruct() const {
  Mat4 m;
  for (int k = 0; k < 4; ++k)
    m += cplx(energies[k]) * outer(vectors[k], vectors[k]);
  return m;
}

Spectrum herm_eig(const Mat4& input) {
  if (input.hermiticity_defect() > kHermitianTol)
    throw numeric_error("herm_eig: input is not Hermitian within tolerance");

  // (M + M^dag)/2 is bit-preserving for exactly Hermitian input and scrubs
  // sub-tolerance asymmetry otherwise.
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j)
      m.a[i][j] = 0.5 * (input.a[i][j] + std::conj(input.a[j][i]));
    m.a[i][i] = cplx(m.a[i][i].real(), 0.0);
  }

  Mat4 v = Mat4::identity();
  const double stop = 1e-14 * m.frobenius_norm();
  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                       {1, 2}, {1, 3}, {2, 3}};
  int sweep = 0;
  while (off_diag_norm(m) > stop) {
    if (++sweep > 100)
      throw numeric_error("herm_eig: Jacobi did not converge in 100 sweeps");
    for (const auto& pq : kPairs) rotate(m, v, pq[0], pq[1]);
  }

  struct Entry {
    double e;
    Vec4 vec;
  };
  std::array<Entry, 4> ent;
  for (int k = 0; k < 4; ++k) {
    ent[k].e = m.a[k][k].real();
    for (int r = 0; r < 4; ++r) ent[k].vec[r] = v.a[r][k];
  }
  std::stable_sort(ent.begin(), ent.end(),
                   [](const Entry& x, const Entry& y) { return x.e < y.e; });

  // Phase-fix every vector (first component above 1e-8 made real-positive) so
  // the basis is a pure function of the input, then order degenerate clusters
  // lexicographically; equal-spectrum inputs give byte-identical bases.
  for (auto& en : ent) {
    for (const cplx& c : en.vec) {
      const double ac = std::abs(c);
      if (ac > 1e-8) {
        const cplx ph = std::conj(c) / ac;
        for (auto& x : en.vec) x *= ph;
        break;
      }
    }
  }
  const double radius = std::max(std::abs(ent[0].e), std::abs(ent[3].e));
  const double gap_tol = 1e-12 * std::max(1.0, radius);
  int lo = 0;
  while (lo < 4) {
    int hi = lo + 1;
    while (hi < 4 && ent[hi].e - ent[hi - 1].e <= gap_tol) ++hi;
    std::sort(ent.begin() + lo, ent.begin() + hi,
              [](const Entry& x, const Entry& y) { return lex_less(x.vec, y.vec); });
    lo = hi;
  }

  Spectrum out;
  for (int k = 0; k < 4; ++k) {
    out.energies[k] = ent[k].e;
    out.vectors[k] = ent[k].vec;
  }
  return out;
}

Mat4 psd_sqrt(const Mat4& m) {
  const Spectrum s = herm_eig(m);
  for (double e : s.energies)
    if (e < -kPsdClipTol)
      throw numeric_error("psd_sqrt: eigenvalue " + std::to_string(e) +
                          " is negative beyond clip tolerance");
  // Eigenvalues below the solver's relative resolution are rank-deficiency
  // artifacts; sqrt would amplify them from O(eps) to O(sqrt(eps)).
  const double floor = kRankFloor * std::max(s.energies[3], 0.0);
  Mat4 r;
  for (int k = 0; k < 4; ++k) {
    const double lam = s.energies[k];
    if (lam <= floor) continue;
    r += cplx(std::sqrt(lam)) * outer(s.vectors[k], s.vectors[k]);
  }
  return r;
}

}  // namespace xyzdm
