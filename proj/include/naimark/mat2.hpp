#pragma once

// Complex 2x2 linear algebra with exact Hermitian semantics.
//
// Everything downstream (group words, momentum classification, coherency
// calculus) funnels through two value types: a general complex 2x2 matrix and
// a Hermitian 2x2 matrix that stays Hermitian by construction.  Conjugations
// of Hermitian matrices are re-symmetrized (off-diagonals averaged against
// their conjugates) so the Hermitian invariant survives long cascades.
//
// All types are immutable values and all operations are pure functions.

#include <cmath>
#include <complex>

#include "naimark/errors.hpp"

namespace naimark {

using cplx = std::complex<double>;

// Absolute comparison tolerance at unit scale used throughout the library
// unless an operation states a tighter one.
inline constexpr double kDefaultTol = 1e-10;

namespace detail {

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const cplx& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename... Ts>
inline void require_finite(const char* what, const Ts&... vs) {
  if (!(is_finite(vs) && ...)) throw domain_error(std::string(what) + ": non-finite entry");
}

}  // namespace detail

struct Mat2 {
  cplx e11{1.0}, e12{0.0}, e21{0.0}, e22{1.0};

  Mat2() = default;
  Mat2(cplx a11, cplx a12, cplx a21, cplx a22) : e11(a11), e12(a12), e21(a21), e22(a22) {
    detail::require_finite("Mat2", e11, e12, e21, e22);
  }

  static Mat2 identity() { return {}; }
  static Mat2 diagonal(cplx a, cplx d) { return {a, 0.0, 0.0, d}; }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
          a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

inline Mat2 operator*(cplx s, const Mat2& a) {
  return {s * a.e11, s * a.e12, s * a.e21, s * a.e22};
}

inline Mat2 operator-(const Mat2& a) { return cplx(-1.0) * a; }

inline cplx det(const Mat2& a) { return a.e11 * a.e22 - a.e12 * a.e21; }

inline cplx trace(const Mat2& a) { return a.e11 + a.e22; }

/// Conjugate transpose.
inline Mat2 adjoint(const Mat2& a) {
  return {std::conj(a.e11), std::conj(a.e21), std::conj(a.e12), std::conj(a.e22)};
}

// Hermitian 2x2 matrix: real diagonal (d1, d2), off-diagonal stored once as
// the (1,2) entry; the (2,1) entry is its conjugate by construction.
struct HermitianMat2 {
  double d1{0.0}, d2{0.0};
  cplx off{0.0};

  HermitianMat2() = default;
  HermitianMat2(double a11, double a22, cplx a12) : d1(a11), d2(a22), off(a12) {
    detail::require_finite("HermitianMat2", d1, d2, off);
  }

  static HermitianMat2 identity() { return {1.0, 1.0, 0.0}; }
  static HermitianMat2 diagonal(double a, double d) { return {a, d, 0.0}; }

  cplx e12() const { return off; }
  cplx e21() const { return std::conj(off); }

  double trace() const { return d1 + d2; }
  double det() const { return d1 * d2 - std::norm(off); }

  Mat2 to_mat2() const { return {cplx(d1), off, std::conj(off), cplx(d2)}; }

  HermitianMat2 scaled(double k) const { return {k * d1, k * d2, k * off}; }

  double max_abs() const {
    return std::max({std::abs(d1), std::abs(d2), std::abs(off)});
  }
};

/// Nearest Hermitian matrix: real parts of the diagonal, off-diagonals
/// averaged against their conjugates.
inline HermitianMat2 hermitian_part(const Mat2& a) {
  return {a.e11.real(), a.e22.real(), 0.5 * (a.e12 + std::conj(a.e21))};
}

/// The transformation H' = G H G†, re-symmetrized to exact Hermitian form.
/// det(H') = |det G|^2 det(H).
inline HermitianMat2 conjugate_transform(const Mat2& g, const HermitianMat2& h) {
  return hermitian_part(g * h.to_mat2() * adjoint(g));
}

struct HermitianEigen {
  double lambda1;  // lambda1 >= lambda2
  double lambda2;
  Mat2 u;  // unitary, columns are eigenvectors; U† H U = diag(lambda1, lambda2)
};

/// Closed-form eigensystem of a Hermitian 2x2 matrix.
///
/// Convention: the first column of U is scaled so its first component is real
/// and non-negative; degenerate spectra return U = identity.
inline HermitianEigen eig_hermitian(const HermitianMat2& h) {
  const double mean = 0.5 * (h.d1 + h.d2);
  const double half_gap = 0.5 * (h.d1 - h.d2);
  const double r = std::hypot(half_gap, std::abs(h.off));
  const double lambda1 = mean + r;
  const double lambda2 = mean - r;

  if (r == 0.0) return {lambda1, lambda2, Mat2::identity()};

  // Pick whichever eigenvector expression has the larger leading entry;
  // both come from (H - lambda1) v = 0.
  cplx p, q;
  if (half_gap >= 0.0) {
    p = cplx(r + half_gap);  // lambda1 - d2
    q = std::conj(h.off);
  } else {
    p = h.off;
    q = cplx(r - half_gap);  // lambda1 - d1
  }
  const double norm = std::sqrt(std::norm(p) + std::norm(q));
  p /= norm;
  q /= norm;
  // Rotate the global phase so the first component is real >= 0.
  if (p != cplx(0.0)) {
    const cplx phase = std::conj(p) / std::abs(p);
    p *= phase;
    q *= phase;
    p = cplx(p.real());  // imaginary part is zero up to rounding
  }
  // Orthonormal completion; det U = |p|^2 + |q|^2 = 1.
  return {lambda1, lambda2, Mat2{p, -std::conj(q), q, std::conj(p)}};
}

}  // namespace naimark
