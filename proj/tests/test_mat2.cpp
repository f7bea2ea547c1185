#include <catch2/catch.hpp>

#include "naimark/mat2.hpp"
#include "naimark/lorentz.hpp"
#include "naimark/polarization.hpp"
#include "testutil.hpp"

using namespace naimark;
using testutil::max_abs_diff;

namespace {

Mat2 random_unit_scale(testutil::Rng& rng) {
  auto c = [&] { return cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)); };
  return {c(), c(), c(), c()};
}

}  // namespace

TEST_CASE("multiply: identity is neutral") {
  testutil::Rng rng(11);
  const Mat2 a = random_unit_scale(rng);
  CHECK(max_abs_diff(Mat2::identity() * a, a) == 0.0);
  CHECK(max_abs_diff(a * Mat2::identity(), a) == 0.0);
}

TEST_CASE("multiply: diagonal phase matrices compose additively") {
  const double d1 = 0.7, d2 = -1.3;
  const Mat2 prod = gen_z(d1).mat() * gen_z(d2).mat();
  CHECK(max_abs_diff(prod, gen_z(d1 + d2).mat()) < 1e-15);
}

TEST_CASE("multiply: B(mu) S(lambda) top-left entry") {
  const double mu = 0.8, lambda = 1.1;
  const Mat2 prod = gen_b(mu).mat() * gen_s(lambda).mat();
  CHECK(prod.e11.real() == Approx(std::exp(mu / 2) * std::cosh(lambda / 2)).epsilon(1e-14));
  CHECK(prod.e11.imag() == 0.0);
}

TEST_CASE("det: pinned values") {
  CHECK(det(Mat2::identity()) == cplx(1.0));
  const double mu = 1.7;
  CHECK(std::abs(det(gen_b(mu).mat()) - cplx(1.0)) < 1e-15);
  CHECK(det(Mat2{1.0, 0.35, 0.0, 1.0}) == cplx(1.0));  // triangular gauge matrix
}

TEST_CASE("det is multiplicative on random unit-scale matrices") {
  testutil::Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const Mat2 a = random_unit_scale(rng), b = random_unit_scale(rng);
    CHECK(std::abs(det(a * b) - det(a) * det(b)) < 1e-12);
  }
}

TEST_CASE("adjoint: pinned values and involution") {
  const HermitianMat2 h{0.4, -0.2, cplx(0.3, 0.9)};
  CHECK(max_abs_diff(adjoint(h.to_mat2()), h.to_mat2()) == 0.0);
  CHECK(max_abs_diff(adjoint(gen_z(0.8).mat()), gen_z(-0.8).mat()) == 0.0);
  CHECK(max_abs_diff(adjoint(Mat2{0.0, 1.0, 0.0, 0.0}), Mat2{0.0, 0.0, 1.0, 0.0}) == 0.0);

  testutil::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Mat2 a = random_unit_scale(rng);
    CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);  // exact involution
  }
}

TEST_CASE("conjugate_transform: identity, boost, quarter-turn") {
  const HermitianMat2 h{1.2, -0.4, cplx(0.1, 0.2)};
  CHECK(max_abs_diff(conjugate_transform(Mat2::identity(), h), h) == 0.0);

  const double mu = 0.9;
  const HermitianMat2 boosted = conjugate_transform(gen_b(mu).mat(), HermitianMat2::identity());
  CHECK(max_abs_diff(boosted, HermitianMat2::diagonal(std::exp(mu), std::exp(-mu))) < 1e-14);

  // R(pi/2) diag(1,-1) R(pi/2)† by direct multiplication: [[0,1],[1,0]].
  const HermitianMat2 swapped =
      conjugate_transform(gen_r(M_PI_2).mat(), HermitianMat2::diagonal(1.0, -1.0));
  CHECK(max_abs_diff(swapped, HermitianMat2{0.0, 0.0, cplx(1.0)}) < 1e-15);
}

TEST_CASE("conjugate_transform: trace under unitary, det under unimodular") {
  testutil::Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const HermitianMat2 h{rng.uniform(-1, 1), rng.uniform(-1, 1),
                          cplx(rng.uniform(-1, 1), rng.uniform(-1, 1))};
    const GroupElement unitary = gen_z(rng.uniform(-3, 3)) * gen_r(rng.uniform(-3, 3));
    CHECK(conjugate_transform(unitary.mat(), h).trace() == Approx(h.trace()).margin(1e-13));

    const GroupElement g = testutil::random_group(rng);
    CHECK(conjugate_transform(g.mat(), h).det() == Approx(h.det()).margin(1e-10));
  }
}

TEST_CASE("eig_hermitian: pinned spectra") {
  const auto diag = eig_hermitian(HermitianMat2::diagonal(3.0, 1.0));
  CHECK(diag.lambda1 == 3.0);
  CHECK(diag.lambda2 == 1.0);
  CHECK(max_abs_diff(diag.u, Mat2::identity()) == 0.0);

  // Degenerate spectrum keeps U = identity by convention.
  const auto degenerate = eig_hermitian(HermitianMat2::diagonal(2.0, 2.0));
  CHECK(degenerate.lambda1 == 2.0);
  CHECK(degenerate.lambda2 == 2.0);
  CHECK(max_abs_diff(degenerate.u, Mat2::identity()) == 0.0);

  // Diagonal with the larger eigenvalue second: U swaps the axes.
  const auto swapped = eig_hermitian(HermitianMat2::diagonal(1.0, 3.0));
  CHECK(swapped.lambda1 == 3.0);
  const Mat2 d = adjoint(swapped.u) * HermitianMat2::diagonal(1.0, 3.0).to_mat2() * swapped.u;
  CHECK(std::abs(d.e11 - cplx(3.0)) < 1e-15);
  CHECK(std::abs(d.e22 - cplx(1.0)) < 1e-15);

  const double c = 0.37;
  const auto symmetric = eig_hermitian(HermitianMat2{1.0, 1.0, cplx(c)});
  CHECK(symmetric.lambda1 == Approx(1.0 + c).epsilon(1e-14));
  CHECK(symmetric.lambda2 == Approx(1.0 - c).epsilon(1e-14));

  // Fully coherent equal-amplitude beam: rank-1 coherency with eigenvalues (2, 0).
  const CoherencyMatrix coh = coherency_from_beam({1.0, 1.0, 0.0, 0.0});
  const auto rank1 = eig_hermitian(coh.h);
  CHECK(rank1.lambda1 == Approx(2.0).epsilon(1e-14));
  CHECK(rank1.lambda2 == Approx(0.0).margin(1e-14));
}

TEST_CASE("eig_hermitian: spectral identities and conventions on random input") {
  testutil::Rng rng(15);
  for (int i = 0; i < 500; ++i) {
    const HermitianMat2 h{rng.uniform(-2, 2), rng.uniform(-2, 2),
                          cplx(rng.uniform(-2, 2), rng.uniform(-2, 2))};
    const auto eig = eig_hermitian(h);
    REQUIRE(eig.lambda1 >= eig.lambda2);
    CHECK(eig.lambda1 + eig.lambda2 == Approx(h.trace()).margin(1e-12));
    CHECK(eig.lambda1 * eig.lambda2 == Approx(h.det()).margin(1e-12));

    // U unitary to 1e-12, first column's first component real and >= 0.
    CHECK(max_abs_diff(eig.u * adjoint(eig.u), Mat2::identity()) < 1e-12);
    CHECK(eig.u.e11.imag() == 0.0);
    CHECK(eig.u.e11.real() >= 0.0);

    // U† H U = diag(lambda1, lambda2).
    const Mat2 d = adjoint(eig.u) * h.to_mat2() * eig.u;
    CHECK(std::abs(d.e11 - cplx(eig.lambda1)) < 1e-12);
    CHECK(std::abs(d.e22 - cplx(eig.lambda2)) < 1e-12);
    CHECK(std::abs(d.e12) < 1e-12);
    CHECK(std::abs(d.e21) < 1e-12);
  }
}

TEST_CASE("constructors reject non-finite entries") {
  const double nan = std::nan("");
  CHECK_THROWS_AS(Mat2(cplx(nan), 0.0, 0.0, 1.0), domain_error);
  CHECK_THROWS_AS(HermitianMat2(1.0, nan, cplx(0.0)), domain_error);
  CHECK_THROWS_AS(FourVector(1.0, 0.0, nan, 0.0), domain_error);
}
