// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/states.hpp"

using namespace triad;

TEST_CASE("density matrix validation accepts exact inputs unchanged") {
  ComplexMatrix m = ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, 0.5}});
  const DensityMatrix rho(m);
  CHECK(rho(0, 0) == cplx(0.5));
  CHECK(rho(1, 1) == cplx(0.5));
  CHECK(rho.dim() == 2);
}

TEST_CASE("density matrix validation rejects bad inputs") {
  SUBCASE("non-square") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, 3)), ValidationError);
  }
  SUBCASE("wrong trace") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(2)), ValidationError);
  }
  SUBCASE("not Hermitian") {
    ComplexMatrix m = ComplexMatrix::from_rows({{0.5, 0.3}, {-0.3, 0.5}});
    CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);
  }
  SUBCASE("negative eigenvalue") {
    ComplexMatrix m = ComplexMatrix::from_rows({{1.2, 0.0}, {0.0, -0.2}});
    CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);
  }
}

TEST_CASE("roundoff band below zero is clamped and renormalized") {
  ComplexMatrix m = ComplexMatrix::from_rows({{1.0 + 5e-11, 0.0}, {0.0, -5e-11}});
  const DensityMatrix rho(m);
  CHECK(rho(1, 1).real() >= 0.0);
  CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-14);
}

TEST_CASE("pure state validates its norm") {
  CHECK_THROWS_AS(PureState({0.5, 0.5}), ValidationError);
  const double s = 1.0 / std::sqrt(2.0);
  const PureState psi({cplx(s), cplx(0.0, s)});
  CHECK(psi.projector().purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("interferometer state matches the hand-computed 2x2 cases") {
  SUBCASE("indistinguishable detectors give the pure superposition") {
    ComplexMatrix gram(2, 2);
    gram(0, 0) = gram(0, 1) = gram(1, 0) = gram(1, 1) = 1.0;
    const DensityMatrix rho = interferometer_state(InterferometerConfig({0.5, 0.5}, gram));
    CHECK(rho(0, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("orthogonal detectors fully decohere") {
    const DensityMatrix rho =
        interferometer_state(InterferometerConfig({0.5, 0.5}, ComplexMatrix::identity(2)));
    CHECK(std::abs(rho(0, 1)) == 0.0);
    CHECK(rho(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("overlap 1/3 gives off-diagonal magnitude 1/6") {
    const DensityMatrix rho = interferometer_state(InterferometerConfig::two_path(0.5, 1.0 / 3.0));
    CHECK(std::abs(rho(0, 1)) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  }
}

TEST_CASE("interferometer entry (i,j) carries the conjugated Gram entry") {
  // Detector vectors chosen with a complex overlap; the reduced state must
  // reproduce sqrt(p_i p_j) <eta_j|eta_i> entrywise.
  const cplx ov(0.3, 0.4);
  const std::vector<std::vector<cplx>> detectors = {
      {1.0, 0.0}, {ov, std::sqrt(1.0 - std::norm(ov))}};
  const std::vector<double> probs = {0.7, 0.3};
  const DensityMatrix rho =
      interferometer_state(InterferometerConfig::from_detector_states(probs, detectors));

  // <eta_2|eta_1> = conj(<eta_1|eta_2>) = conj(ov)
  const cplx expected = std::sqrt(0.7 * 0.3) * std::conj(ov);
  CHECK(std::abs(rho(0, 1) - expected) < 1e-12);
}

TEST_CASE("interferometer config validation") {
  CHECK_THROWS_AS(InterferometerConfig({0.5, 0.6}, ComplexMatrix::identity(2)), ValidationError);
  CHECK_THROWS_AS(InterferometerConfig({-0.1, 1.1}, ComplexMatrix::identity(2)), ValidationError);
  CHECK_THROWS_AS(InterferometerConfig::two_path(0.5, cplx(1.5, 0.0)), ValidationError);
  ComplexMatrix bad_diag = ComplexMatrix::from_rows({{0.9, 0.0}, {0.0, 1.0}});
  CHECK_THROWS_AS(InterferometerConfig({0.5, 0.5}, bad_diag), ValidationError);
}

TEST_CASE("all-ones Gram reproduces the global pure state") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + int(rng.uniform_int(4));
    std::vector<double> p(d);
    double sum = 0.0;
    for (double& v : p) {
      v = rng.uniform_pos();
      sum += v;
    }
    for (double& v : p) v /= sum;

    ComplexMatrix gram(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gram(i, j) = 1.0;
    const DensityMatrix rho = interferometer_state(InterferometerConfig(p, gram));

    std::vector<cplx> amps(d);
    for (int i = 0; i < d; ++i) amps[i] = std::sqrt(p[i]);
    const DensityMatrix proj = PureState(amps).projector();
    REQUIRE((rho.matrix() - proj.matrix()).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("diagonal pure state lift") {
  const DensityMatrix half(ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, 0.5}}));
  const PureState lift = diagonal_pure_state(half);
  CHECK(lift.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  ComplexMatrix point(3, 3);
  point(0, 0) = 1.0;
  const PureState lift3 = diagonal_pure_state(DensityMatrix(point));
  CHECK(lift3.amplitudes()[0] == cplx(1.0));
  CHECK(lift3.amplitudes()[1] == cplx(0.0));

  // lift preserves the diagonal
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(4, 4, derive_seed(88, trial));
    const DensityMatrix proj = diagonal_pure_state(rho).projector();
    for (int i = 0; i < 4; ++i)
      REQUIRE(std::abs(proj(i, i).real() - rho(i, i).real()) < 1e-12);
  }
}

TEST_CASE("the lift of a pure state differs from it only by phases") {
  // For pure rho with nonzero diagonal, the lift equals D rho D^dagger for a
  // diagonal unitary D, so entrywise magnitudes must match.
  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi = random_pure(3, derive_seed(123, trial));
    const DensityMatrix rho = psi.projector();
    const DensityMatrix lifted = diagonal_pure_state(rho).projector();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        REQUIRE(std::abs(std::abs(lifted(i, j)) - std::abs(rho(i, j))) < 1e-10);
  }
}

TEST_CASE("dephasing zeroes off-diagonals and is idempotent") {
  const DensityMatrix rho = random_density(3, 3, 4242);
  const DensityMatrix deph = dephase(rho);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        REQUIRE(std::abs(deph(i, i).real() - rho(i, i).real()) < 1e-14);
      else
        REQUIRE(std::abs(deph(i, j)) == 0.0);
    }
  const DensityMatrix twice = dephase(deph);
  CHECK((twice.matrix() - deph.matrix()).frobenius_norm() == 0.0);
}

TEST_CASE("Bloch round trip") {
  SUBCASE("origin is maximally mixed") {
    const DensityMatrix rho = from_bloch({0.0, 0.0, 0.0});
    CHECK(rho(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(rho(0, 1)) == 0.0);
  }
  SUBCASE("north pole is the first basis projector") {
    const DensityMatrix rho = from_bloch({0.0, 0.0, 1.0});
    CHECK(rho(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("overlap 2/3 at p = 1/2 gives r = (2/3, 0, 0)") {
    const DensityMatrix rho = interferometer_state(InterferometerConfig::two_path(0.5, 2.0 / 3.0));
    const BlochVector b = to_bloch(rho);
    CHECK(b.r1 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(b.r2 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(b.r3 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rho(0, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }
  SUBCASE("1000 random vectors round trip within 1e-12") {
    Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
      // uniform in the ball by rejection
      BlochVector b;
      do {
        b.r1 = 2.0 * rng.uniform01() - 1.0;
        b.r2 = 2.0 * rng.uniform01() - 1.0;
        b.r3 = 2.0 * rng.uniform01() - 1.0;
      } while (b.norm() > 1.0);
      const BlochVector back = to_bloch(from_bloch(b));
      REQUIRE(std::abs(back.r1 - b.r1) < 1e-12);
      REQUIRE(std::abs(back.r2 - b.r2) < 1e-12);
      REQUIRE(std::abs(back.r3 - b.r3) < 1e-12);
    }
  }
  SUBCASE("dimension errors") {
    CHECK_THROWS_AS(to_bloch(random_density(3, 3, 1)), ValidationError);
    CHECK_THROWS_AS(from_bloch({1.0, 1.0, 1.0}), ValidationError);
  }
}

TEST_CASE("random density matrices are deterministic and valid") {
  const DensityMatrix a = random_density(4, 2, 12345);
  const DensityMatrix b = random_density(4, 2, 12345);
  CHECK((a.matrix() - b.matrix()).frobenius_norm() == 0.0);

  const DensityMatrix pure = random_density(4, 1, 5);
  CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-10));

  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_density(4, 4, derive_seed(9, trial));
    REQUIRE(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
    REQUIRE(rho.matrix().hermiticity_defect() < 1e-14);
    const Spectrum s = eig_hermitian(rho.matrix());
    REQUIRE(s.eigenvalues.back() > -1e-10);
  }

  CHECK_THROWS_AS(random_density(3, 0, 1), ValidationError);
  CHECK_THROWS_AS(random_density(3, 4, 1), ValidationError);
}

TEST_CASE("requested rank shows up in the spectrum") {
  const DensityMatrix rho = random_density(5, 2, 777);
  const Spectrum s = eig_hermitian(rho.matrix());
  CHECK(s.eigenvalues[1] > 1e-10);
  CHECK(std::abs(s.eigenvalues[2]) < 1e-10);
}

TEST_CASE("random pure states are normalized, deterministic, Haar-like") {
  for (int trial = 0; trial < 100; ++trial) {
    const PureState psi = random_pure(3, derive_seed(55, trial));
    double norm2 = 0.0;
    for (const cplx& a : psi.amplitudes()) norm2 += std::norm(a);
    REQUIRE(std::abs(norm2 - 1.0) < 1e-12);
  }
  const PureState a = random_pure(2, 8);
  const PureState b = random_pure(2, 8);
  CHECK(a.amplitudes() == b.amplitudes());

  // Haar moment: E|a_1|^2 = 1/2 for d = 2.
  double mean = 0.0;
  const int samples = 10000;
  for (int trial = 0; trial < samples; ++trial)
    mean += std::norm(random_pure(2, derive_seed(314, trial)).amplitudes()[0]);
  mean /= samples;
  CHECK(mean == doctest::Approx(0.5).epsilon(0.04));
}
