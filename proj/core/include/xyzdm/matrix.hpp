#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace xyzdm {

using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-10;   // max |M - M^dag| entry accepted as Hermitian
inline constexpr double kTraceTol = 1e-10;       // |tr(rho) - 1| accepted for a density matrix
inline constexpr double kPsdClipTol = 1e-9;      // eigenvalues in [-kPsdClipTol, 0) clip to 0
inline constexpr double kOrthonormalTol = 1e-10; // |<v_i|v_j> - delta_ij| for a usable eigenbasis
inline constexpr double kRankFloor = 1e-12;      // lam / lam_max below this is rank deficiency, not signal

// Dense complex square matrix of compile-time dimension. Everything in this
// library is 2x2 or 4x4, so plain std::array storage and O(N^3) loops are the
// right tool; there is no allocation anywhere on the hot path.
template <std::size_t N>
struct CMat {
  std::array<std::array<cplx, N>, N> a{};

  static constexpr std::size_t dim = N;

  cplx& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

  static CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m.a[i][i] = 1.0;
    return m;
  }

  static CMat zero() { return CMat{}; }

  CMat dagger() const {
    CMat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m.a[i][j] = std::conj(a[j][i]);
    return m;
  }

  CMat conjugate() const {
    CMat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m.a[i][j] = std::conj(a[i][j]);
    return m;
  }

  CMat transpose() const {
    CMat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m.a[i][j] = a[j][i];
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += a[i][i];
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) s += std::norm(a[i][j]);
    return std::sqrt(s);
  }

  // Largest entry-wise |M - M^dag|; 0 for exactly Hermitian input.
  double hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        d = std::max(d, std::abs(a[i][j] - std::conj(a[j][i])));
    return d;
  }

  friend CMat operator+(const CMat& x, const CMat& y) {
    CMat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m.a[i][j] = x.a[i][j] + y.a[i][j];
    return m;
  }

  friend CMat operator-(const CMat& x, const CMat& y) {
    CMat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m.a[i][j] = x.a[i][j] - y.a[i][j];
    return m;
  }

  friend CMat operator*(const CMat& x, const CMat& y) {
    CMat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx xik = x.a[i][k];
        if (xik == 0.0) continue;  // preserves exact structural zeros
        for (std::size_t j = 0; j < N; ++j) m.a[i][j] += xik * y.a[k][j];
      }
    return m;
  }

  friend CMat operator*(cplx s, const CMat& x) {
    CMat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m.a[i][j] = s * x.a[i][j];
    return m;
  }

  friend CMat operator*(const CMat& x, cplx s) { return s * x; }

  CMat& operator+=(const CMat& y) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) a[i][j] += y.a[i][j];
    return *this;
  }

  double max_abs_diff(const CMat& y) const {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        d = std::max(d, std::abs(a[i][j] - y.a[i][j]));
    return d;
  }
};

using Mat2 = CMat<2>;
using Mat4 = CMat<4>;

template <std::size_t N>
using CVec = std::array<cplx, N>;
using Vec2 = CVec<2>;
using Vec4 = CVec<4>;

template <std::size_t N>
inline cplx dot(const CVec<N>& x, const CVec<N>& y) {  // <x|y>, conjugate-linear in x
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

template <std::size_t N>
inline double vec_norm(const CVec<N>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::norm(x[i]);
  return std::sqrt(s);
}

template <std::size_t N>
inline CVec<N> mat_vec(const CMat<N>& m, const CVec<N>& x) {
  CVec<N> y{};
  for (std::size_t i = 0; i < N; ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += m.a[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

template <std::size_t N>
inline CMat<N> outer(const CVec<N>& x, const CVec<N>& y) {  // |x><y|
  CMat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m.a[i][j] = x[i] * std::conj(y[j]);
  return m;
}

// Kronecker product on qubit pairs: row 2*i1+i2, column 2*j1+j2. This index
// convention fixes the basis order |00>,|01>,|10>,|11> everywhere.
inline Mat4 tensor2(const Mat2& x, const Mat2& y) {
  Mat4 m;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          m.a[2 * i1 + i2][2 * j1 + j2] = x.a[i1][j1] * y.a[i2][j2];
  return m;
}

// pauli(0..3) = 1, sigma_x, sigma_y, sigma_z with sigma_y = [[0,-i],[i,0]].
inline Mat2 pauli(int k) {
  Mat2 m;
  switch (k) {
    case 0: m.a[0][0] = 1.0; m.a[1][1] = 1.0; break;
    case 1: m.a[0][1] = 1.0; m.a[1][0] = 1.0; break;
    case 2: m.a[0][1] = cplx(0.0, -1.0); m.a[1][0] = cplx(0.0, 1.0); break;
    case 3: m.a[0][0] = 1.0; m.a[1][1] = -1.0; break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return m;
}

}  // namespace xyzdm
