#pragma once

// Poincare-sphere geometry and entropy.
//
// Three radii describe a partially coherent beam: the outer radius
// S0 = (a^2+b^2)/2, the actual radius R = |S vector| with
// R = (1/2) sqrt((a^2-b^2)^2 + 4 (ab)^2 cos^2 chi), and the inner radius
// S3 = (a^2-b^2)/2.  R runs from S0 (chi = 0) down to S3 (chi = 90 deg); the
// degree of polarization is f = R/S0, and S0^2 - R^2 = (ab sin chi)^2 = det C
// is invariant under every Naimark transformation.
//
// Normalizing the coherency matrix by its trace gives a density matrix with
// eigenvalues (1 +- f)/2 and von Neumann entropy S(f); pairing the beam with
// a companion whose cos chi and sin chi are exchanged gives a second sphere
// whose coherency determinant complements the first: det C + det C' = (ab)^2,
// independent of chi.  Entropies are in nats (natural log); a bits accessor
// divides by ln 2.

#include <cmath>

#include "naimark/mat2.hpp"
#include "naimark/polarization.hpp"

namespace naimark {

/// Spherical coordinates of a Stokes vector in the (S3, S1, S2) subspace:
/// S3 = R cos(polar), S1 = R sin(polar) cos(azimuth), S2 = R sin(polar) sin(azimuth).
struct SphereState {
  StokesVector s;
  double radius;   // R
  double polar;    // xi, measured from the S3 axis
  double azimuth;  // the beam's relative phase delta for beam-built states
  bool degenerate; // R = 0: angles fixed to 0 by convention
};

inline SphereState sphere_state(const StokesVector& s) {
  const double r = s.radius();
  if (r == 0.0) return {s, 0.0, 0.0, 0.0, true};
  const double azimuth = (s.s1 == 0.0 && s.s2 == 0.0) ? 0.0 : std::atan2(s.s2, s.s1);
  return {s, r, std::acos(std::min(1.0, std::max(-1.0, s.s3 / r))), azimuth, false};
}

struct PoincareRadii {
  double s0;  // outer radius (a^2+b^2)/2
  double r;   // sphere radius
  double s3;  // inner radius (a^2-b^2)/2, signed
};

inline PoincareRadii radii(const BeamSpec& beam) {
  const double a2 = beam.a * beam.a, b2 = beam.b * beam.b;
  const double ab_cos = beam.a * beam.b * beam.cos_chi();
  return {0.5 * (a2 + b2), 0.5 * std::hypot(a2 - b2, 2.0 * ab_cos), 0.5 * (a2 - b2)};
}

/// S0^2 - R^2 = (ab sin chi)^2, the determinant of the coherency matrix;
/// unchanged by every Naimark transformation.
inline double lorentz_invariant(const BeamSpec& beam) {
  const double s = beam.a * beam.b * std::sqrt(std::max(0.0, 1.0 - std::pow(beam.cos_chi(), 2)));
  return s * s;
}

/// Trace-one Hermitian matrix with eigenvalues (1 +- f)/2 in [0, 1].
struct DensityMatrix {
  HermitianMat2 h;

  explicit DensityMatrix(const HermitianMat2& m) : h(m) {
    if (std::abs(h.trace() - 1.0) > 1e-12) throw domain_error("DensityMatrix: trace != 1");
    if (h.det() < -1e-12 || h.d1 < -1e-12 || h.d2 < -1e-12)
      throw domain_error("DensityMatrix: not positive semidefinite");
  }
};

inline DensityMatrix density_matrix(const CoherencyMatrix& c) {
  const double tr = c.trace();
  if (tr <= 0.0) throw zero_beam_error("density_matrix: zero beam");
  return DensityMatrix{c.h.scaled(1.0 / tr)};
}

/// Von Neumann entropy of a two-level state with eigenvalues (1 +- f)/2, in
/// nats: 0 at f = 1, ln 2 at f = 0.  0 ln 0 is taken as 0.
inline double entropy(double f) {
  detail::require_finite("entropy", f);
  if (f < -1e-12 || f > 1.0 + 1e-12) throw domain_error("entropy: f outside [0, 1]");
  f = std::min(1.0, std::max(0.0, f));
  const double up = 0.5 * (1.0 + f), dn = 0.5 * (1.0 - f);
  double s = 0.0;
  if (up > 0.0) s -= up * std::log(up);
  if (dn > 0.0) s -= dn * std::log(dn);
  return s;
}

/// entropy(f) rescaled to bits.
inline double entropy_bits(double f) { return entropy(f) / std::log(2.0); }

/// Entropy at full decoherence (chi = 90 deg):
/// (a^2/w) ln(w/a^2) + (b^2/w) ln(w/b^2) with w = a^2 + b^2.
/// ln 2 for equal amplitudes, 0 when either component vanishes.
inline double max_entropy(double a, double b) {
  detail::require_finite("max_entropy", a, b);
  const double a2 = a * a, b2 = b * b, w = a2 + b2;
  if (w <= 0.0) throw zero_beam_error("max_entropy: zero beam");
  double s = 0.0;
  if (a2 > 0.0) s += (a2 / w) * std::log(w / a2);
  if (b2 > 0.0) s += (b2 / w) * std::log(w / b2);
  return s;
}

/// A beam paired with its second-sphere companion (cos chi and sin chi
/// exchanged).  The entropies move in opposite directions as chi varies and
/// their sum is not conserved; the conserved quantity is
/// det C + det C' = (ab)^2.
struct TwoSphereSystem {
  BeamSpec beam;
  BeamSpec complement_beam;
  double f, entropy_nats;
  double f_complement, entropy_complement;
  double det_c, det_c_complement;

  double conserved() const { return det_c + det_c_complement; }
};

inline TwoSphereSystem second_sphere(const BeamSpec& beam) {
  const double sin_chi = std::sqrt(std::max(0.0, 1.0 - std::pow(beam.cos_chi(), 2)));
  const BeamSpec companion{beam.a, beam.b, beam.delta,
                           sin_chi <= 0.0 ? std::numeric_limits<double>::infinity()
                                          : -std::log(sin_chi)};
  const CoherencyMatrix c = coherency_from_beam(beam);
  const CoherencyMatrix cc = coherency_from_beam(companion);
  const double f = degree_of_polarization(c);
  const double fc = degree_of_polarization(cc);
  return {beam, companion, f, entropy(f), fc, entropy(fc), c.det(), cc.det()};
}

}  // namespace naimark
