// Classify a few four-momenta, canonicalize them, and verify their stabilizer
// families leave them invariant.

#include <cstdio>

#include "naimark/naimark.hpp"

using namespace naimark;

int main() {
  const struct {
    const char* label;
    double e, pz, px, py;
  } momenta[] = {
      {"massive at rest", 1.0, 0.0, 0.0, 0.0},
      {"massive, moving", 2.5, 1.5, 0.4, -0.2},
      {"lightlike along x", 1.7, 0.0, 1.7, 0.0},
      {"spacelike", 0.3, 1.2, 0.0, 0.5},
  };

  for (const auto& m : momenta) {
    const MomentumMatrix p = MomentumMatrix::from_components(m.e, m.pz, m.px, m.py);
    const Canonicalization canon = canonicalize(p);
    const Stabilizer w = stabilizer_element(canon.cls.kind, 0.8);
    const bool stabilizes_canonical = is_little_group_element(w.element, canon.canonical, 1e-12);
    const GroupElement dressed = canon.g.inverse() * w.element * canon.g;
    const bool stabilizes_original = is_little_group_element(dressed, p, 1e-9);
    std::printf("%-18s class=%-14s m^2=%+8.4f  stabilizer ok: canonical=%s original=%s\n",
                m.label, little_group_name(canon.cls.kind), canon.cls.invariant_mass_squared,
                stabilizes_canonical ? "yes" : "no", stabilizes_original ? "yes" : "no");
  }
  return 0;
}
