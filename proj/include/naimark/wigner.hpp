#pragma once

// Wigner little groups: classify four-momenta by the sign of the momentum
// matrix determinant, canonicalize them with explicit group words, and build
// stabilizer elements satisfying W P W† = P.
//
//   det > 0  massive          canonical m * I            stabilized by R(theta)
//   det = 0  massless         canonical diag(1, 0)       stabilized by [[1,g],[0,1]]
//   det < 0  imaginary mass   canonical sqrt(-det) * diag(1, -1), stabilized by S(lambda)
//
// Z(delta) satisfies the stabilizer condition for all three canonical forms.
// The zero matrix gets its own class (null) since no canonical form exists.

#include <cmath>

#include "naimark/lorentz.hpp"
#include "naimark/mat2.hpp"

namespace naimark {

/// Hermitian packing of a four-momentum (E, pz, px, py); det is the squared
/// invariant mass.
struct MomentumMatrix {
  HermitianMat2 h;

  static MomentumMatrix from_components(double energy, double pz, double px, double py) {
    return {pack(FourVector{energy, pz, px, py}).h};
  }

  FourVector four_momentum() const { return unpack(FourVectorMatrix{h}); }
  double energy() const { return 0.5 * h.trace(); }
  double mass_squared() const { return h.det(); }
};

enum class LittleGroupKind { Massive, Massless, ImaginaryMass, Null };

inline const char* little_group_name(LittleGroupKind k) noexcept {
  switch (k) {
    case LittleGroupKind::Massive: return "massive";
    case LittleGroupKind::Massless: return "massless";
    case LittleGroupKind::ImaginaryMass: return "imaginary_mass";
    case LittleGroupKind::Null: return "null";
  }
  return "?";
}

struct LittleGroupClass {
  LittleGroupKind kind;
  double invariant_mass_squared;
};

// Relative zero threshold for the determinant; det scales quadratically with
// the energy unit, hence the trace^2 scaling.
inline constexpr double kClassifyTol = 1e-9;

/// Classify a four-momentum by det sign, with |det| < tol * trace^2 treated
/// as zero.  Negative-energy momenta are rejected for det >= 0 only: the
/// energy sign of a spacelike vector is not orthochronous-invariant, so the
/// imaginary-mass branch accepts either sign.
inline LittleGroupClass classify(const MomentumMatrix& p, double tol = kClassifyTol) {
  const double tr = p.h.trace();
  const double d = p.h.det();
  if (p.h.max_abs() == 0.0) return {LittleGroupKind::Null, 0.0};
  if (std::abs(d) < tol * tr * tr) {
    if (tr < 0.0) throw unsupported_branch_error("classify: negative-energy lightlike momentum");
    return {LittleGroupKind::Massless, d};
  }
  if (d > 0.0) {
    if (tr < 0.0) throw unsupported_branch_error("classify: negative-energy timelike momentum");
    return {LittleGroupKind::Massive, d};
  }
  return {LittleGroupKind::ImaginaryMass, d};
}

/// Canonical momentum matrix of a class at unit scale (m = 1 for massive).
inline MomentumMatrix canonical_momentum(LittleGroupKind kind) {
  switch (kind) {
    case LittleGroupKind::Massive: return {HermitianMat2::identity()};
    case LittleGroupKind::Massless: return {HermitianMat2::diagonal(1.0, 0.0)};
    case LittleGroupKind::ImaginaryMass: return {HermitianMat2::diagonal(1.0, -1.0)};
    case LittleGroupKind::Null: return {HermitianMat2::diagonal(0.0, 0.0)};
  }
  throw domain_error("canonical_momentum: unknown kind");
}

struct Canonicalization {
  LittleGroupClass cls;
  GroupElement g;            // conjugate_transform(g, p) == canonical
  MomentumMatrix canonical;  // m*I, diag(1,0), or sqrt(-det)*diag(1,-1)
};

/// Bring a momentum onto its canonical form with an explicit word: an
/// azimuthal phase Z(-phi) and polar rotation R(-theta) align the spatial
/// momentum with +z, then a z-boost B(mu) fixes the scale.  For the massless
/// class the boost sets trace = 1 (lightlike energy is not invariant).
inline Canonicalization canonicalize(const MomentumMatrix& p) {
  const LittleGroupClass cls = classify(p);
  if (cls.kind == LittleGroupKind::Null)
    throw zero_momentum_error("canonicalize: zero momentum matrix");

  const FourVector fp = p.four_momentum();
  const double rho = std::hypot(fp.x, fp.y);
  const double pmag = std::hypot(rho, fp.z);

  GeneratorWord word;
  double energy = fp.t;
  double pz = fp.z;
  if (rho > 0.0) {
    const double phi = std::atan2(fp.y, fp.x);
    const double theta = std::atan2(rho, fp.z);
    word.push_back({Generator::R, -theta});
    word.push_back({Generator::Z, -phi});
    pz = pmag;
  } else if (fp.z < 0.0) {
    word.push_back({Generator::R, -M_PI});  // momentum along -z
    pz = pmag;
  }

  double mu = 0.0;
  MomentumMatrix canonical{};
  switch (cls.kind) {
    case LittleGroupKind::Massive: {
      const double m = std::sqrt(cls.invariant_mass_squared);
      mu = 0.5 * std::log((energy - pz) / (energy + pz));
      canonical = {HermitianMat2::diagonal(m, m)};
      break;
    }
    case LittleGroupKind::Massless: {
      mu = -std::log(energy + pz);
      canonical = {HermitianMat2::diagonal(1.0, 0.0)};
      break;
    }
    case LittleGroupKind::ImaginaryMass: {
      const double s = std::sqrt(-cls.invariant_mass_squared);
      mu = std::log(s / (energy + pz));
      canonical = {HermitianMat2::diagonal(s, -s)};
      break;
    }
    case LittleGroupKind::Null:
      break;  // unreachable
  }
  GeneratorWord full;
  full.push_back({Generator::B, mu});
  full.insert(full.end(), word.begin(), word.end());
  return {cls, compose(full), canonical};
}

struct Stabilizer {
  LittleGroupKind kind;
  GroupElement element;
  double parameter;
};

/// A one-parameter stabilizer of the class's canonical momentum:
/// R(theta) for massive, the triangular gauge matrix for massless,
/// S(lambda) for imaginary mass.
inline Stabilizer stabilizer_element(LittleGroupKind kind, double parameter) {
  switch (kind) {
    case LittleGroupKind::Massive: return {kind, gen_r(parameter), parameter};
    case LittleGroupKind::Massless: return {kind, gen_triangular(parameter), parameter};
    case LittleGroupKind::ImaginaryMass: return {kind, gen_s(parameter), parameter};
    case LittleGroupKind::Null: break;
  }
  throw domain_error("stabilizer_element: the null class has no stabilizer family");
}

/// True iff W P W† = P within tol, scaled by the largest entry of P (the
/// trace vanishes for the canonical imaginary-mass momentum).
inline bool is_little_group_element(const GroupElement& w, const MomentumMatrix& p,
                                    double tol = kDefaultTol) {
  const HermitianMat2 moved = conjugate_transform(w.mat(), p.h);
  const double scale = std::max(p.h.max_abs(), 1e-300);
  const double dev = std::max({std::abs(moved.d1 - p.h.d1), std::abs(moved.d2 - p.h.d2),
                               std::abs(moved.off - p.h.off)});
  return dev < tol * scale;
}

}  // namespace naimark
