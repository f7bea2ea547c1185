#pragma once

// Jones-vector optics on the coherency-matrix level.
//
// A beam with field amplitudes (a, b), relative phase delta and decoherence
// exponent sigma has the coherency matrix
//
//     C = [ a^2                    a b cos(chi) e^{+i delta} ]
//         [ a b cos(chi) e^{-i delta}   b^2                  ]
//
// with cos(chi) = e^{-sigma}; chi is the decoherence angle (0 fully coherent,
// 90 degrees fully incoherent; sigma = +inf is admitted for the latter).
// Optical elements act by the Naimark conjugation C' = G C G†, times the
// squared overall attenuation magnitude for absorptive elements.  Stokes
// parameters are the half-sum/half-difference linear combinations
//
//     S0 = (C11+C22)/2   S3 = (C11-C22)/2   S1 = Re C12   S2 = Im C12
//
// ordered (S0, S3, S1, S2) so they transform exactly like (t, z, x, y); the
// Mueller matrix of an invertible element is then overall^2 times the 4x4
// Lorentz image of its group element.  det C = (ab sin chi)^2 is invariant
// under every invertible element with unit overall factor.

#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "naimark/lorentz.hpp"
#include "naimark/mat2.hpp"

namespace naimark {

/// Physical beam state: amplitudes, relative phase, decoherence exponent.
/// sigma may be +inf (chi = 90 degrees); NaN is rejected everywhere.
struct BeamSpec {
  double a{1.0}, b{1.0}, delta{0.0}, sigma{0.0};

  BeamSpec() = default;
  BeamSpec(double a_, double b_, double delta_, double sigma_)
      : a(a_), b(b_), delta(delta_), sigma(sigma_) {
    detail::require_finite("BeamSpec", a, b, delta);
    if (std::isnan(sigma) || sigma < 0.0) throw domain_error("BeamSpec: sigma must be >= 0");
    if (a < 0.0 || b < 0.0) throw domain_error("BeamSpec: amplitudes must be >= 0");
  }

  static BeamSpec from_sigma(double a, double b, double delta, double sigma) {
    return {a, b, delta, sigma};
  }

  /// chi in [0, pi/2]; sigma = -ln(cos chi).  Anything at or beyond the
  /// closest double to pi/2 is fully incoherent (sigma = +inf, cos chi = 0).
  static BeamSpec from_chi(double a, double b, double delta, double chi) {
    detail::require_finite("BeamSpec", chi);
    if (chi < 0.0 || chi > M_PI_2 + 1e-12) throw domain_error("BeamSpec: chi outside [0, pi/2]");
    if (chi >= M_PI_2) return {a, b, delta, std::numeric_limits<double>::infinity()};
    return {a, b, delta, -std::log(std::cos(chi))};
  }

  double cos_chi() const { return std::exp(-sigma); }
  double chi() const { return std::acos(cos_chi()); }
};

/// cos(chi) = e^{-sigma}; minimum decoherence at chi = 0, maximum at pi/2.
inline double decoherence_angle(const BeamSpec& beam) { return beam.chi(); }

/// Hermitian beam observable; diagonal entries are the component
/// intensities, the off-diagonal their mutual coherence.
struct CoherencyMatrix {
  HermitianMat2 h;

  CoherencyMatrix() = default;
  explicit CoherencyMatrix(const HermitianMat2& m) : h(m) {
    const double scale = std::max(h.max_abs(), 1.0);
    if (h.d1 < -kDefaultTol * scale || h.d2 < -kDefaultTol * scale)
      throw domain_error("CoherencyMatrix: negative intensity");
    if (std::norm(h.off) > h.d1 * h.d2 + kDefaultTol * scale * scale)
      throw domain_error("CoherencyMatrix: |C12|^2 exceeds C11*C22");
  }

  double s11() const { return h.d1; }
  double s22() const { return h.d2; }
  cplx s12() const { return h.off; }
  cplx s21() const { return std::conj(h.off); }
  double trace() const { return h.trace(); }
  double det() const { return h.det(); }
};

inline CoherencyMatrix coherency_from_beam(const BeamSpec& beam) {
  const double mag = beam.a * beam.b * beam.cos_chi();
  return CoherencyMatrix{HermitianMat2{beam.a * beam.a, beam.b * beam.b,
                                       mag * cplx(std::cos(beam.delta), std::sin(beam.delta))}};
}

/// f = sqrt(1 - 4 det C / (tr C)^2) in [0, 1]; 1 for a fully coherent beam,
/// (a^2-b^2)/(a^2+b^2) at full decoherence.
inline double degree_of_polarization(const CoherencyMatrix& c) {
  const double tr = c.trace();
  if (tr <= 0.0) throw zero_beam_error("degree_of_polarization: zero beam");
  const double arg = 1.0 - 4.0 * c.det() / (tr * tr);
  return std::sqrt(std::min(1.0, std::max(0.0, arg)));
}

/// Real four-vector repackaging of a coherency matrix, ordered (S0, S3, S1,
/// S2) to mirror (t, z, x, y).  S0 >= sqrt(S1^2+S2^2+S3^2), intensity units.
struct StokesVector {
  double s0{0.0}, s3{0.0}, s1{0.0}, s2{0.0};

  StokesVector() = default;
  StokesVector(double s0_, double s3_, double s1_, double s2_)
      : s0(s0_), s3(s3_), s1(s1_), s2(s2_) {
    detail::require_finite("StokesVector", s0, s3, s1, s2);
    const double r2 = s1 * s1 + s2 * s2 + s3 * s3;
    const double slack = kDefaultTol * std::max(1.0, s0 * s0);
    if (s0 * s0 + slack < r2) throw domain_error("StokesVector: S0 below the polarization radius");
  }

  std::array<double, 4> as_array() const { return {s0, s3, s1, s2}; }
  double radius() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }
  double minkowski_norm() const { return s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3; }
};

inline StokesVector stokes_from_coherency(const CoherencyMatrix& c) {
  return {0.5 * (c.h.d1 + c.h.d2), 0.5 * (c.h.d1 - c.h.d2), c.h.off.real(), c.h.off.imag()};
}

/// Inverse of stokes_from_coherency (exact linear bijection).
inline CoherencyMatrix coherency_from_stokes(const StokesVector& s) {
  return CoherencyMatrix{HermitianMat2{s.s0 + s.s3, s.s0 - s.s3, cplx(s.s1, s.s2)}};
}

/// C' = G C G†.  Preserves det (hence the decoherence invariant) and
/// positivity.
inline CoherencyMatrix transform_coherency(const GroupElement& g, const CoherencyMatrix& c) {
  return CoherencyMatrix{conjugate_transform(g.mat(), c.h)};
}

// --- optical elements ---------------------------------------------------------

enum class ElementKind { PhaseShift, Attenuate, Rotate, Squeeze45, Polarizer };

enum class Axis { X, Y };

/// An optical element.  Invertible elements factor into a unimodular group
/// element times a positive overall attenuation magnitude (global phase is
/// unobservable and discarded; the attenuation magnitude changes measured
/// intensities and is kept).  The polarizer is an exact singular projector.
struct OpticalElement {
  ElementKind kind;
  double p1{0.0}, p2{0.0};  // PhaseShift/Rotate/Squeeze45 use p1; Attenuate uses (mu1, mu2)
  Axis axis{Axis::X};       // Polarizer only
  double overall_factor{1.0};

  static OpticalElement phase_shift(double delta) {
    detail::require_finite("phase_shift", delta);
    return {ElementKind::PhaseShift, delta, 0.0, Axis::X, 1.0};
  }
  static OpticalElement attenuator(double mu1, double mu2) {
    detail::require_finite("attenuator", mu1, mu2);
    return {ElementKind::Attenuate, mu1, mu2, Axis::X, std::exp(-0.5 * (mu1 + mu2))};
  }
  static OpticalElement rotator(double theta) {
    detail::require_finite("rotator", theta);
    return {ElementKind::Rotate, theta, 0.0, Axis::X, 1.0};
  }
  static OpticalElement squeeze45(double lambda) {
    detail::require_finite("squeeze45", lambda);
    return {ElementKind::Squeeze45, lambda, 0.0, Axis::X, 1.0};
  }
  static OpticalElement polarizer(Axis axis) {
    return {ElementKind::Polarizer, 0.0, 0.0, axis, 1.0};
  }

  bool invertible() const { return kind != ElementKind::Polarizer; }
};

/// Large-mu attenuator approximating a polarizer; converges to the exact
/// projector as mu grows.
inline OpticalElement polarizer_approximation(Axis axis, double mu) {
  return axis == Axis::X ? OpticalElement::attenuator(0.0, mu)
                         : OpticalElement::attenuator(mu, 0.0);
}

/// The unimodular part of an invertible element plus its overall attenuation
/// magnitude.  Throws singular_element_error for the polarizer.
inline std::pair<GroupElement, double> element_to_group(const OpticalElement& e) {
  switch (e.kind) {
    case ElementKind::PhaseShift: return {gen_z(e.p1), 1.0};
    case ElementKind::Attenuate: return {gen_b(e.p2 - e.p1), e.overall_factor};
    case ElementKind::Rotate: return {gen_r(e.p1), 1.0};
    case ElementKind::Squeeze45: return {gen_s(e.p1), 1.0};
    case ElementKind::Polarizer: break;
  }
  throw singular_element_error("element_to_group: polarizer has no group element");
}

/// Send a beam through one element: overall^2 * G C G† for invertible
/// elements, the exact projection J C J† for the polarizer.
inline CoherencyMatrix apply_element(const OpticalElement& e, const CoherencyMatrix& c) {
  if (e.kind == ElementKind::Polarizer) {
    return CoherencyMatrix{e.axis == Axis::X ? HermitianMat2{c.h.d1, 0.0, 0.0}
                                             : HermitianMat2{0.0, c.h.d2, 0.0}};
  }
  const auto [g, overall] = element_to_group(e);
  return CoherencyMatrix{conjugate_transform(g.mat(), c.h).scaled(overall * overall)};
}

/// The element's 4x4 action on (S0, S3, S1, S2): overall^2 times the Lorentz
/// image of its group element.  Scaled, so not metric-preserving for lossy
/// attenuators.  Throws singular_element_error for the polarizer.
inline Mat4 mueller_matrix(const OpticalElement& e) {
  const auto [g, overall] = element_to_group(e);
  return (overall * overall) * to_four_by_four(g).mat();
}

}  // namespace naimark
