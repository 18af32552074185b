// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/channels.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

using namespace triad;

namespace {

ComplexMatrix hadamard2() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h(0, 0) = h(0, 1) = h(1, 0) = s;
  h(1, 1) = -s;
  return h;
}

DensityMatrix random_diagonal(int d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> p(d);
  double sum = 0.0;
  for (double& v : p) {
    v = rng.uniform_pos();
    sum += v;
  }
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = p[i] / sum;
  return DensityMatrix(m);
}

}  // namespace

TEST_CASE("channel construction validates completeness") {
  SUBCASE("empty operator list") {
    CHECK_THROWS_AS(KrausChannel(std::vector<ComplexMatrix>{}), ValidationError);
  }
  SUBCASE("operators must share a square shape") {
    std::vector<ComplexMatrix> ops;
    ops.emplace_back(2, 3);
    CHECK_THROWS_AS(KrausChannel{ops}, ValidationError);

    std::vector<ComplexMatrix> mixed{ComplexMatrix::identity(2), ComplexMatrix::identity(3)};
    CHECK_THROWS_AS(KrausChannel{mixed}, ValidationError);
  }
  SUBCASE("incomplete channel is rejected") {
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= cplx(0.5);
    CHECK_THROWS_AS(KrausChannel({half}), ValidationError);
  }
  SUBCASE("identity is a valid channel") {
    const KrausChannel ch = KrausChannel::unitary(ComplexMatrix::identity(3));
    CHECK(ch.dim() == 3);
    CHECK(ch.ops().size() == 1);
  }
}

TEST_CASE("dephasing channel equals the dephasing map") {
  for (int d = 2; d <= 4; ++d) {
    const KrausChannel ch = KrausChannel::dephasing(d);
    const DensityMatrix rho = random_density(d, d, derive_seed(40, d));
    const DensityMatrix out = apply(ch, rho);
    const DensityMatrix expect = dephase(rho);
    CHECK((out.matrix() - expect.matrix()).max_abs() < 1e-14);
  }
}

TEST_CASE("unitary channels preserve the spectrum, permutations preserve coherence") {
  const DensityMatrix rho = random_density(3, 3, 11);

  SUBCASE("permutation leaves every measure unchanged") {
    const KrausChannel ch = KrausChannel::permutation({2, 0, 1});
    const DensityMatrix out = apply(ch, rho);
    for (MeasureKind m : {MeasureKind::L1, MeasureKind::L1Normalized, MeasureKind::RelEntropy,
                          MeasureKind::RelEntropyNormalized})
      REQUIRE(std::abs(coherence(out, m) - coherence(rho, m)) < 1e-12);
  }
  SUBCASE("permutation moves basis states where it says") {
    ComplexMatrix e0(3, 3);
    e0(0, 0) = 1.0;
    const DensityMatrix out = apply(KrausChannel::permutation({2, 0, 1}), DensityMatrix(e0));
    CHECK(out(2, 2).real() == doctest::Approx(1.0));
  }
  SUBCASE("diagonal phase unitaries are incoherent and coherence-preserving") {
    ComplexMatrix u(3, 3);
    u(0, 0) = std::polar(1.0, 0.3);
    u(1, 1) = std::polar(1.0, 1.1);
    u(2, 2) = std::polar(1.0, 2.7);
    const KrausChannel ch = KrausChannel::unitary(u);
    CHECK(is_incoherent(ch, 1e-12));
    const DensityMatrix out = apply(ch, rho);
    for (MeasureKind m : {MeasureKind::L1, MeasureKind::RelEntropy})
      REQUIRE(std::abs(coherence(out, m) - coherence(rho, m)) < 1e-12);
  }
  SUBCASE("non-unitary matrix is rejected") {
    ComplexMatrix u = ComplexMatrix::identity(2);
    u(0, 0) = 0.5;
    CHECK_THROWS_AS(KrausChannel::unitary(u), ValidationError);
  }
}

TEST_CASE("the diagonal lift is blind to diagonal unitaries and covariant under permutations") {
  // Hand-built state with an exactly representable unit trace, so nothing in
  // the validation pipeline renormalizes and bit-exact comparisons hold.
  ComplexMatrix m(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.25;
  m(2, 2) = 0.25;
  m(0, 1) = m(1, 0) = 0.1;
  const DensityMatrix rho(m);
  const ComplexMatrix lift = diagonal_pure_state(rho).projector().matrix();

  SUBCASE("lift(U rho U^dag) = lift(rho) exactly for diagonal phases") {
    // Phases from {1, i, -1} multiply exactly in binary floating point.
    ComplexMatrix u(3, 3);
    u(0, 0) = cplx(1.0, 0.0);
    u(1, 1) = cplx(0.0, 1.0);
    u(2, 2) = cplx(-1.0, 0.0);
    const DensityMatrix rotated = apply(KrausChannel::unitary(u), rho);
    const ComplexMatrix lift2 = diagonal_pure_state(rotated).projector().matrix();
    CHECK((lift2 - lift).max_abs() == 0.0);
  }
  SUBCASE("coherence of the lift is permutation-invariant") {
    const DensityMatrix shuffled = apply(KrausChannel::permutation({2, 0, 1}), rho);
    const DensityMatrix lift_a = diagonal_pure_state(rho).projector();
    const DensityMatrix lift_b = diagonal_pure_state(shuffled).projector();
    for (MeasureKind mk : {MeasureKind::L1Normalized, MeasureKind::RelEntropyNormalized})
      CHECK(std::abs(coherence(lift_a, mk) - coherence(lift_b, mk)) < 1e-12);
  }
}

TEST_CASE("channel and state dimensions must match") {
  const KrausChannel ch = KrausChannel::dephasing(2);
  const DensityMatrix rho = random_density(3, 3, 5);
  CHECK_THROWS_AS(apply(ch, rho), ValidationError);
  CHECK_THROWS_AS(selective_apply(ch, rho), ValidationError);
}

TEST_CASE("selective application") {
  SUBCASE("dephasing a balanced superposition yields two point masses") {
    const DensityMatrix rho = interferometer_state(InterferometerConfig::two_path(0.5, 1.0));
    const std::vector<Outcome> outs = selective_apply(KrausChannel::dephasing(2), rho);
    REQUIRE(outs.size() == 2);
    CHECK(outs[0].probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(outs[1].probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(outs[0].state(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(outs[1].state(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("unitary evolution is a single certain outcome") {
    const DensityMatrix rho = random_density(2, 2, 8);
    const std::vector<Outcome> outs = selective_apply(KrausChannel::unitary(hadamard2()), rho);
    REQUIRE(outs.size() == 1);
    CHECK(outs[0].probability == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("outcomes average back to the deterministic channel") {
    Rng rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
      const int d = 2 + int(rng.uniform_int(3));
      const std::uint64_t state_seed = rng.next_u64();
      const std::uint64_t chan_seed = rng.next_u64();
      const DensityMatrix rho = random_density(d, d, state_seed);
      const KrausChannel ch = random_incoherent_channel(d, 1 + int(rng.uniform_int(4)), chan_seed);
      ComplexMatrix mix(d, d);
      for (const Outcome& o : selective_apply(ch, rho)) mix += o.probability * o.state.matrix();
      REQUIRE((mix - apply(ch, rho).matrix()).max_abs() < 1e-10);
    }
  }
}

TEST_CASE("incoherence detection") {
  CHECK(is_incoherent(KrausChannel::dephasing(3), 1e-12));
  CHECK(is_incoherent(KrausChannel::permutation({1, 0}), 1e-12));
  CHECK_FALSE(is_incoherent(KrausChannel::unitary(hadamard2()), 1e-12));
}

TEST_CASE("random incoherent channels") {
  SUBCASE("exactly complete and incoherent") {
    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + int(rng.uniform_int(4));
      const int n_kraus = 1 + int(rng.uniform_int(std::uint64_t(d) + 2));
      const KrausChannel ch = random_incoherent_channel(d, n_kraus, rng.next_u64());
      ComplexMatrix acc(d, d);
      for (const ComplexMatrix& k : ch.ops()) acc += k.dagger() * k;
      acc -= ComplexMatrix::identity(d);
      REQUIRE(acc.max_abs() < 1e-12);
      REQUIRE(is_incoherent(ch, 1e-12));
    }
  }
  SUBCASE("diagonal states stay diagonal") {
    Rng rng(56);
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + int(rng.uniform_int(3));
      const std::uint64_t chan_seed = rng.next_u64();
      const std::uint64_t state_seed = rng.next_u64();
      const KrausChannel ch = random_incoherent_channel(d, 2, chan_seed);
      const DensityMatrix out = apply(ch, random_diagonal(d, state_seed));
      double offdiag = 0.0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) offdiag = std::max(offdiag, std::abs(out(i, j)));
      REQUIRE(offdiag < 1e-12);
    }
  }
  SUBCASE("seeded construction is reproducible") {
    const KrausChannel a = random_incoherent_channel(4, 3, 909);
    const KrausChannel b = random_incoherent_channel(4, 3, 909);
    const KrausChannel c = random_incoherent_channel(4, 3, 910);
    REQUIRE(a.ops().size() == b.ops().size());
    for (std::size_t k = 0; k < a.ops().size(); ++k)
      CHECK((a.ops()[k] - b.ops()[k]).max_abs() == 0.0);
    double diff = 0.0;
    for (std::size_t k = 0; k < std::min(a.ops().size(), c.ops().size()); ++k)
      diff = std::max(diff, (a.ops()[k] - c.ops()[k]).max_abs());
    CHECK(diff > 1e-6);
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(random_incoherent_channel(0, 2, 1), ValidationError);
    CHECK_THROWS_AS(random_incoherent_channel(3, 0, 1), ValidationError);
    // d = 1 is legal: every channel on a single path is trivially incoherent
    const KrausChannel one = random_incoherent_channel(1, 2, 1);
    CHECK(one.dim() == 1);
    CHECK(is_incoherent(one, 1e-12));
  }
}

TEST_CASE("axiom screening passes for both bona fide measures") {
  for (MeasureKind m : {MeasureKind::L1Normalized, MeasureKind::RelEntropyNormalized})
    for (int d = 2; d <= 4; ++d) {
      const AxiomReport rep = check_axioms(m, d, 200, 2026);
      CAPTURE(rep.measure_label);
      CAPTURE(d);
      REQUIRE(rep.trials == 200);
      REQUIRE(rep.worst_c1 <= 1e-9);
      REQUIRE(rep.worst_c2a <= 1e-9);
      REQUIRE(rep.worst_c2b <= 1e-9);
      REQUIRE(rep.worst_c3 <= 1e-9);
    }
}

TEST_CASE("axiom screening flags a broken measure") {
  // Largest off-diagonal magnitude: vanishes on diagonal states and is convex,
  // but splitting coherence across selective outcomes inflates its average.
  const MeasureFn broken = [](const DensityMatrix& rho) {
    double worst = 0.0;
    for (int i = 0; i < rho.dim(); ++i)
      for (int j = 0; j < rho.dim(); ++j)
        if (i != j) worst = std::max(worst, std::abs(rho(i, j)));
    return worst;
  };
  const AxiomReport rep = check_axioms_with("max-offdiag", broken, 3, 300, 13);
  CHECK(rep.worst_c1 <= 1e-12);
  const double flagged = std::max({rep.worst_c2a, rep.worst_c2b, rep.worst_c3});
  CHECK(flagged > 1e-6);
  CHECK(rep.measure_label == "max-offdiag");
}

TEST_CASE("axiom report records the offending seed") {
  const AxiomReport rep = check_axioms(MeasureKind::L1Normalized, 2, 50, 3);
  // margins are non-negative by construction and tiny for a true measure
  CHECK(rep.worst_c2b >= 0.0);
  CHECK(rep.dim == 2);
}
