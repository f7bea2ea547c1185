#include <catch2/catch.hpp>

#include "naimark/oracle.hpp"
#include "testutil.hpp"

using namespace naimark;
using testutil::max_abs_diff;

TEST_CASE("mc_coherency: zero jitter reproduces the coherent matrix exactly") {
  const double a = 1.3, b = 0.8, delta = 0.65;
  const CoherencyMatrix mc = oracle::mc_coherency(a, b, delta, {0.0, 1000, 7});
  CHECK(mc.s11() == a * a);
  CHECK(mc.s22() == b * b);
  CHECK(mc.s12() == a * b * cplx(std::cos(delta), std::sin(delta)));
  CHECK(max_abs_diff(mc.h, coherency_from_beam({a, b, delta, 0.0}).h) == 0.0);
}

TEST_CASE("mc_coherency: vanishing amplitude kills the row") {
  const CoherencyMatrix mc = oracle::mc_coherency(0.0, 0.9, 0.2, {1.0, 100, 3});
  CHECK(mc.s11() == 0.0);
  CHECK(mc.s12() == cplx(0.0));
  CHECK(mc.s22() == 0.81);
}

TEST_CASE("mc_coherency is deterministic in the seed") {
  const oracle::JitterModel model{0.7, 20000, 12345};
  const CoherencyMatrix one = oracle::mc_coherency(1.0, 1.0, 0.4, model);
  const CoherencyMatrix two = oracle::mc_coherency(1.0, 1.0, 0.4, model);
  CHECK(one.s12() == two.s12());

  const CoherencyMatrix other = oracle::mc_coherency(1.0, 1.0, 0.4, {0.7, 20000, 54321});
  CHECK(one.s12() != other.s12());
}

TEST_CASE("mc_coherency: sampled contraction matches e^{-sigma}") {
  // sigma = ln 2 corresponds to phase variance s^2 = 2 ln 2; the sampled
  // |S12| should approach ab/2 at the 1/sqrt(N) rate.
  const double sigma = std::log(2.0);
  const std::uint64_t n = 1000000;
  const CoherencyMatrix mc = oracle::mc_coherency(1.0, 1.0, 0.0, {2.0 * sigma, n, 2024});
  CHECK(std::abs(std::abs(mc.s12()) - 0.5) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("mc_coherency obeys the coherency bound for any jitter") {
  testutil::Rng rng(71);
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(0.1, 2.0), b = rng.uniform(0.1, 2.0);
    const CoherencyMatrix mc = oracle::mc_coherency(
        a, b, rng.uniform(0, 6.28), {rng.uniform(0, 4), 2000, static_cast<std::uint64_t>(i)});
    CHECK(std::norm(mc.s12()) <= mc.s11() * mc.s22() * (1.0 + 1e-12));
  }
}

TEST_CASE("mc_coherency: 30-seed mean within four standard errors") {
  const double sigma = std::log(2.0);
  const int n_seeds = 30;
  double values[n_seeds];
  double mean = 0.0;
  for (int k = 0; k < n_seeds; ++k) {
    const CoherencyMatrix mc = oracle::mc_coherency(
        1.0, 1.0, 0.3, {2.0 * sigma, 100000, static_cast<std::uint64_t>(1000 + k)});
    values[k] = std::abs(mc.s12());
    mean += values[k];
  }
  mean /= n_seeds;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= (n_seeds - 1);
  const double stderr_mean = std::sqrt(var / n_seeds);
  CHECK(std::abs(mean - 0.5) < 4.0 * stderr_mean);
}

TEST_CASE("mc_coherency validates its model") {
  CHECK_THROWS_AS(oracle::JitterModel(-1.0, 10, 0), domain_error);
  CHECK_THROWS_AS(oracle::JitterModel(1.0, 0, 0), domain_error);
}

TEST_CASE("outer_product_lorentz: pinned generator images") {
  CHECK(max_abs_diff(oracle::outer_product_lorentz(GroupElement::identity()),
                     Mat4::identity()) == 0.0);

  // Phase: identity on (t, z), rotation x -> y in the lower-right block.
  const double delta = 0.85;
  Mat4 want = Mat4::identity();
  want.at(2, 2) = want.at(3, 3) = std::cos(delta);
  want.at(2, 3) = -std::sin(delta);
  want.at(3, 2) = std::sin(delta);
  CHECK(max_abs_diff(oracle::outer_product_lorentz(gen_z(delta)), want) < 1e-14);

  // Boost along z mixes (t, z) with cosh/sinh of the full rapidity.
  const double mu = 1.15;
  want = Mat4::identity();
  want.at(0, 0) = want.at(1, 1) = std::cosh(mu);
  want.at(0, 1) = want.at(1, 0) = std::sinh(mu);
  CHECK(max_abs_diff(oracle::outer_product_lorentz(gen_b(mu)), want) < 1e-13);
}

TEST_CASE("outer_product_lorentz agrees with the column-built image") {
  testutil::Rng rng(72);
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = testutil::random_group(rng, 1, 2);
    CHECK(max_abs_diff(oracle::outer_product_lorentz(g), to_four_by_four(g).mat()) < 1e-11);
  }
}
