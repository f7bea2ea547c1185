#pragma once

// Two-by-two representation of the Lorentz group.
//
// A unit-determinant complex 2x2 matrix G acts on a four-vector packed into a
// Hermitian matrix by conjugation X' = G X G† (the Naimark transformation).
// The packing used throughout is
//
//     X = [ t+z   x+iy ]        det X = t^2 - z^2 - x^2 - y^2,
//         [ x-iy  t-z  ]
//
// with the fixed coordinate order (t, z, x, y).  NOTE the order: z is the
// second component, mirroring the Stokes order (S0, S3, S1, S2) used by the
// polarization layer.  With this packing the generators act as
//
//     Z(delta): rotation about z, x -> y for positive delta (right-handed)
//     R(theta): rotation about y, z -> x for positive theta
//     B(mu):    boost along z
//     S(lambda): boost along x
//
// and every G maps to a real 4x4 matrix on (t, z, x, y) that preserves the
// Minkowski metric diag(1, -1, -1, -1).

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "naimark/mat2.hpp"

namespace naimark {

struct FourVector {
  double t{0.0}, z{0.0}, x{0.0}, y{0.0};

  FourVector() = default;
  FourVector(double t_, double z_, double x_, double y_) : t(t_), z(z_), x(x_), y(y_) {
    detail::require_finite("FourVector", t, z, x, y);
  }

  /// Minkowski interval t^2 - z^2 - x^2 - y^2.
  double interval() const { return t * t - z * z - x * x - y * y; }

  double max_abs() const {
    return std::max({std::abs(t), std::abs(z), std::abs(x), std::abs(y)});
  }
};

/// A Lorentz transformation in the two-by-two representation: det = 1,
/// checked at construction to kDefaultTol.
class GroupElement {
 public:
  explicit GroupElement(const Mat2& m) : m_(m) {
    if (std::abs(det(m) - cplx(1.0)) > kDefaultTol)
      throw domain_error("GroupElement: determinant is not 1");
  }

  /// Rescale an invertible matrix onto det = 1 by a square root of its
  /// determinant.
  static GroupElement normalized(const Mat2& m) {
    const cplx d = det(m);
    if (std::abs(d) < 1e-150) throw domain_error("GroupElement: singular matrix");
    return GroupElement(unchecked{}, (1.0 / std::sqrt(d)) * m);
  }

  static GroupElement identity() { return GroupElement(unchecked{}, Mat2::identity()); }

  const Mat2& mat() const { return m_; }

  /// Exact inverse of a unimodular matrix.
  GroupElement inverse() const {
    return GroupElement(unchecked{}, Mat2{m_.e22, -m_.e12, -m_.e21, m_.e11});
  }

  GroupElement negated() const { return GroupElement(unchecked{}, -m_); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(unchecked{}, a.m_ * b.m_);
  }

  struct unchecked {};
  GroupElement(unchecked, const Mat2& m) : m_(m) {}

 private:
  Mat2 m_;
};

// --- generators -------------------------------------------------------------

/// Z(delta) = diag(e^{i delta/2}, e^{-i delta/2}): rotation about z by delta.
inline GroupElement gen_z(double delta) {
  detail::require_finite("gen_z", delta);
  return {GroupElement::unchecked{},
          Mat2::diagonal(std::polar(1.0, 0.5 * delta), std::polar(1.0, -0.5 * delta))};
}

/// R(theta) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]: rotation about y.
inline GroupElement gen_r(double theta) {
  detail::require_finite("gen_r", theta);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  return {GroupElement::unchecked{}, Mat2{c, -s, s, c}};
}

/// B(mu) = diag(e^{mu/2}, e^{-mu/2}): boost along z with rapidity mu.
inline GroupElement gen_b(double mu) {
  detail::require_finite("gen_b", mu);
  return {GroupElement::unchecked{},
          Mat2::diagonal(std::exp(0.5 * mu), std::exp(-0.5 * mu))};
}

/// S(lambda) = [[cosh l/2, sinh l/2], [sinh l/2, cosh l/2]]: boost along x.
inline GroupElement gen_s(double lambda) {
  detail::require_finite("gen_s", lambda);
  const double c = std::cosh(0.5 * lambda), s = std::sinh(0.5 * lambda);
  return {GroupElement::unchecked{}, Mat2{c, s, s, c}};
}

/// [[1, gamma], [0, 1]]: the gauge transformation of the massless little
/// group; leaves diag(1, 0) invariant.
inline GroupElement gen_triangular(double gamma) {
  detail::require_finite("gen_triangular", gamma);
  return {GroupElement::unchecked{}, Mat2{1.0, gamma, 0.0, 1.0}};
}

// --- generator words ---------------------------------------------------------

enum class Generator { Z, R, B, S, Triangular };

inline const char* generator_name(Generator g) noexcept {
  switch (g) {
    case Generator::Z: return "z";
    case Generator::R: return "r";
    case Generator::B: return "b";
    case Generator::S: return "s";
    case Generator::Triangular: return "tri";
  }
  return "?";
}

struct GeneratorStep {
  Generator kind;
  double parameter;  // radians for Z/R, rapidity for B/S, dimensionless for Triangular
};

using GeneratorWord = std::vector<GeneratorStep>;

inline GroupElement generator(const GeneratorStep& step) {
  switch (step.kind) {
    case Generator::Z: return gen_z(step.parameter);
    case Generator::R: return gen_r(step.parameter);
    case Generator::B: return gen_b(step.parameter);
    case Generator::S: return gen_s(step.parameter);
    case Generator::Triangular: return gen_triangular(step.parameter);
  }
  throw domain_error("generator: unknown kind");
}

/// Left-to-right product of the word's generator matrices, renormalized onto
/// det = 1 every 16 multiplications to bound drift in long cascades.
inline GroupElement compose(const GeneratorWord& word) {
  Mat2 acc = Mat2::identity();
  int since_renorm = 0;
  for (const GeneratorStep& step : word) {
    acc = acc * generator(step).mat();
    if (++since_renorm == 16) {
      acc = GroupElement::normalized(acc).mat();
      since_renorm = 0;
    }
  }
  return GroupElement::normalized(acc);
}

// --- four-vector packing ------------------------------------------------------

/// Hermitian packing of a four-vector; det equals the Minkowski interval.
struct FourVectorMatrix {
  HermitianMat2 h;
};

inline FourVectorMatrix pack(const FourVector& v) {
  return {HermitianMat2{v.t + v.z, v.t - v.z, cplx(v.x, v.y)}};
}

inline FourVector unpack(const FourVectorMatrix& m) {
  return {0.5 * (m.h.d1 + m.h.d2), 0.5 * (m.h.d1 - m.h.d2), m.h.off.real(), m.h.off.imag()};
}

/// Unpack a raw matrix, rejecting non-Hermitian input.
inline FourVector unpack(const Mat2& m) {
  const double scale = std::max({std::abs(m.e11), std::abs(m.e12), std::abs(m.e21),
                                 std::abs(m.e22), 1.0});
  if (std::abs(m.e11.imag()) > kDefaultTol * scale ||
      std::abs(m.e22.imag()) > kDefaultTol * scale ||
      std::abs(m.e12 - std::conj(m.e21)) > kDefaultTol * scale)
    throw domain_error("unpack: matrix is not Hermitian");
  return unpack(FourVectorMatrix{hermitian_part(m)});
}

/// The Naimark transformation on a four-vector: unpack(G pack(v) G†).
/// Preserves the interval.
inline FourVector naimark_apply(const GroupElement& g, const FourVector& v) {
  return unpack(FourVectorMatrix{conjugate_transform(g.mat(), pack(v).h)});
}

// --- real 4x4 image -----------------------------------------------------------

/// Plain real 4x4 matrix, row-major, coordinate order (t, z, x, y).
struct Mat4 {
  std::array<double, 16> e{};

  double& at(std::size_t i, std::size_t j) { return e[4 * i + j]; }
  double at(std::size_t i, std::size_t j) const { return e[4 * i + j]; }

  static Mat4 identity() {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m.at(i, i) = 1.0;
    return m;
  }

  std::array<double, 4> apply(const std::array<double, 4>& v) const {
    std::array<double, 4> r{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  FourVector apply(const FourVector& v) const {
    const auto r = apply(std::array<double, 4>{v.t, v.z, v.x, v.y});
    return {r[0], r[1], r[2], r[3]};
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : e) m = std::max(m, std::abs(v));
    return m;
  }
};

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

inline Mat4 operator*(double s, const Mat4& a) {
  Mat4 r = a;
  for (double& v : r.e) v *= s;
  return r;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

/// max-entry deviation of Lambda^T eta Lambda from eta, eta = diag(1,-1,-1,-1).
inline double metric_defect(const Mat4& m) {
  static constexpr std::array<double, 4> eta{1.0, -1.0, -1.0, -1.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += m.at(k, i) * eta[k] * m.at(k, j);
      const double want = (i == j) ? eta[i] : 0.0;
      worst = std::max(worst, std::abs(s - want));
    }
  return worst;
}

/// Real 4x4 Lorentz transformation on (t, z, x, y): metric-preserving and
/// orthochronous, validated at construction.  The tolerance scales with the
/// squared matrix magnitude since the metric defect of a boost grows as
/// cosh^2 of the rapidity times machine epsilon.
class LorentzMatrix4 {
 public:
  explicit LorentzMatrix4(const Mat4& m) : m_(m) {
    const double scale = std::max(1.0, m.max_abs() * m.max_abs());
    if (metric_defect(m) > kDefaultTol * scale)
      throw domain_error("LorentzMatrix4: metric not preserved");
    if (m.at(0, 0) < 1.0 - kDefaultTol * std::max(1.0, m.max_abs()))
      throw domain_error("LorentzMatrix4: not orthochronous");
  }

  const Mat4& mat() const { return m_; }
  double at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

  FourVector apply(const FourVector& v) const { return m_.apply(v); }

  friend LorentzMatrix4 operator*(const LorentzMatrix4& a, const LorentzMatrix4& b) {
    return LorentzMatrix4(a.m_ * b.m_);
  }

 private:
  Mat4 m_;
};

/// The 4x4 Lorentz matrix of a group element, built column-by-column from the
/// Naimark action on the coordinate basis.  Quadratic in G, so Lambda(-G) =
/// Lambda(G) exactly (the double cover collapses).
inline LorentzMatrix4 to_four_by_four(const GroupElement& g) {
  static const std::array<FourVector, 4> basis{
      FourVector{1, 0, 0, 0}, FourVector{0, 1, 0, 0},
      FourVector{0, 0, 1, 0}, FourVector{0, 0, 0, 1}};
  Mat4 m;
  for (std::size_t j = 0; j < 4; ++j) {
    const FourVector col = naimark_apply(g, basis[j]);
    m.at(0, j) = col.t;
    m.at(1, j) = col.z;
    m.at(2, j) = col.x;
    m.at(3, j) = col.y;
  }
  return LorentzMatrix4(m);
}

}  // namespace naimark
