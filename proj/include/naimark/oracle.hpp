#pragma once

// Independent brute-force validators.
//
// mc_coherency reproduces the coherency matrix by actually time-averaging
// phasors (equal-time products, zero lag): the relative phase jitters as
// delta + phi with phi drawn from a Gaussian of variance s^2, so the
// off-diagonal magnitude contracts by the characteristic function
// E[e^{i phi}] = e^{-s^2/2}, i.e. sigma = s^2/2.
//
// outer_product_lorentz rebuilds the 4x4 Lorentz image of a group element
// from scratch: the entrywise action of G . G† on the four matrix entries
// (X11, X12, X21, X22) is the outer-product matrix of the entries of G and
// G†, and a fixed complex basis change maps that onto (t, z, x, y).  It
// shares no code path with to_four_by_four, which goes column-by-column
// through the 2x2 conjugation.
//
// Reproducibility: sampling is partitioned into fixed chunks of 4096; chunk k
// uses an mt19937_64 seeded with splitmix64(splitmix64(seed) + k) — the outer
// mix keeps nearby user seeds from sharing chunk streams.  Gaussians come
// from Box-Muller on the generator's uniforms (not std::normal_distribution,
// whose algorithm is implementation-defined), and per-chunk partial sums are
// combined in chunk order.  Results are therefore bit-identical for a given
// seed regardless of how chunks would be scheduled.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "naimark/lorentz.hpp"
#include "naimark/polarization.hpp"

namespace naimark::oracle {

/// Stationary Gaussian jitter on the relative phase; amplitudes stay fixed.
struct JitterModel {
  double phase_variance{0.0};  // s^2 >= 0
  std::uint64_t samples{1};
  std::uint64_t seed{0};

  JitterModel(double variance, std::uint64_t n, std::uint64_t seed_)
      : phase_variance(variance), samples(n), seed(seed_) {
    if (!(variance >= 0.0)) throw domain_error("JitterModel: variance must be >= 0");
    if (n < 1) throw domain_error("JitterModel: need at least one sample");
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t kChunk = 4096;

}  // namespace detail

/// Monte Carlo time-averaged coherency matrix for amplitudes (a, b) and mean
/// relative phase delta.  Diagonal entries are the exact intensities; the
/// off-diagonal is the sampled mean of a b e^{i (delta + phi)}.  With zero
/// variance the integrand is constant and the mean is taken exactly.
inline CoherencyMatrix mc_coherency(double a, double b, double delta, const JitterModel& model) {
  naimark::detail::require_finite("mc_coherency", a, b, delta);
  if (a < 0.0 || b < 0.0) throw domain_error("mc_coherency: amplitudes must be >= 0");

  const double ab = a * b;
  if (model.phase_variance == 0.0 || ab == 0.0) {
    return CoherencyMatrix{
        HermitianMat2{a * a, b * b, ab * cplx(std::cos(delta), std::sin(delta))}};
  }

  const double s = std::sqrt(model.phase_variance);
  const std::uint64_t stream = detail::splitmix64(model.seed);
  double sum_re = 0.0, sum_im = 0.0;
  const std::uint64_t n_chunks = (model.samples + detail::kChunk - 1) / detail::kChunk;
  for (std::uint64_t chunk = 0; chunk < n_chunks; ++chunk) {
    std::mt19937_64 rng(detail::splitmix64(stream + chunk));
    const std::uint64_t begin = chunk * detail::kChunk;
    const std::uint64_t end = std::min(model.samples, begin + detail::kChunk);
    double re = 0.0, im = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) {
      // Box-Muller: u1 in (0, 1], u2 in [0, 1).
      const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
      const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;
      const double phi = s * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
      re += std::cos(delta + phi);
      im += std::sin(delta + phi);
    }
    sum_re += re;
    sum_im += im;
  }
  const double inv_n = 1.0 / static_cast<double>(model.samples);
  return CoherencyMatrix{
      HermitianMat2{a * a, b * b, ab * cplx(sum_re * inv_n, sum_im * inv_n)}};
}

namespace detail {

using C4 = std::array<std::array<cplx, 4>, 4>;

inline C4 matmul(const C4& a, const C4& b) {
  C4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

}  // namespace detail

/// The 4x4 Lorentz image built entry-by-entry: the 16 products of G's entries
/// with the conjugated entries act on the column (X11, X12, X21, X22) of the
/// packed four-vector, and the basis change
///
///   (t, z, x, y) = 1/2 [ 1 0 0 1; 1 0 0 -1; 0 1 1 0; 0 -i i 0 ] (X11 X12 X21 X22)
///
/// maps that action onto coordinates (the y row sign matches X12 = x + iy).
/// Must agree with to_four_by_four entrywise; the two paths are independent.
inline Mat4 outer_product_lorentz(const GroupElement& g) {
  const cplx al = g.mat().e11, be = g.mat().e12, ga = g.mat().e21, de = g.mat().e22;
  const cplx i{0.0, 1.0};

  // Entrywise action on (X11, X12, X21, X22) under X' = G X G†.
  const detail::C4 action{{{al * std::conj(al), al * std::conj(be), be * std::conj(al), be * std::conj(be)},
                           {al * std::conj(ga), al * std::conj(de), be * std::conj(ga), be * std::conj(de)},
                           {ga * std::conj(al), ga * std::conj(be), de * std::conj(al), de * std::conj(be)},
                           {ga * std::conj(ga), ga * std::conj(de), de * std::conj(ga), de * std::conj(de)}}};

  // (X11, X12, X21, X22) from (t, z, x, y) and back.
  const detail::C4 entries_from_coords{{{1, 1, 0, 0},
                                        {0, 0, 1, i},
                                        {0, 0, 1, -i},
                                        {1, -1, 0, 0}}};
  const detail::C4 coords_from_entries{{{0.5, 0, 0, 0.5},
                                        {0.5, 0, 0, -0.5},
                                        {0, 0.5, 0.5, 0},
                                        {0, -0.5 * i, 0.5 * i, 0}}};

  const detail::C4 full = detail::matmul(coords_from_entries, detail::matmul(action, entries_from_coords));
  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = full[r][c].real();
  return m;
}

}  // namespace naimark::oracle
