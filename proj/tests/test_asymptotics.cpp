#include <doctest.h>

#include <cmath>

#include "urbound/asymptotics.hpp"
#include "urbound/mus.hpp"
#include "urbound/random.hpp"
#include "urbound/uncertainty.hpp"

using namespace urbound;

namespace {

PureState ground(const WeylPair& p) { return realign_phases(harper_ground(p).psi, p).psi; }

}  // namespace

TEST_CASE("generator") {
  const ComplexMatrix u3 = generator(clock(3));
  const EigenDecomposition e = eig_hermitian(u3);
  const double s = std::sqrt(2.0 * kPi / 3.0);
  CHECK(std::abs(e.eigenvalues(0) + s) <= 1e-12);
  CHECK(std::abs(e.eigenvalues(1)) <= 1e-12);
  CHECK(std::abs(e.eigenvalues(2) - s) <= 1e-12);

  CHECK(generator(ComplexMatrix::Identity(4, 4)).norm() <= 1e-14);

  for (std::size_t d : {2u, 8u, 32u, 33u}) {
    const WeylPair p = clock_shift_pair(d);
    const ComplexMatrix gu = generator(p.u());
    const ComplexMatrix gv = generator(p.v());
    CHECK((unitary_from_generator(gu) - p.u()).norm() <= 1e-10);
    CHECK((unitary_from_generator(gv) - p.v()).norm() <= 1e-10);
    const ComplexMatrix f = dft(d);
    CHECK((gv - f * gu * f.adjoint()).norm() <= 1e-9);
    RealVector labels(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) labels(static_cast<Eigen::Index>(k)) = label_of(k, d);
    const ComplexMatrix expected = std::sqrt(2.0 * kPi / static_cast<double>(d)) *
                                   labels.cast<Complex>().asDiagonal().toDenseMatrix();
    CHECK((gu - expected).norm() <= 1e-10);
  }

  const ComplexMatrix w = haar_random_unitary(6, 3);
  CHECK((unitary_from_generator(generator(w)) - w).norm() <= 1e-10);
  CHECK_THROWS_AS(generator(2.0 * clock(3)), Error);
}

TEST_CASE("pdelta_membership") {
  const PureState zero = PureState::basis(16, slot_of(0, 16));
  const MembershipReport r0 = pdelta_membership(zero, 0.05, 0.01);
  CHECK(r0.p_delta_expectation == doctest::Approx(1.0));
  CHECK(r0.member);
  CHECK(r0.variance_bound == doctest::Approx(0.5 * 0.05 * 0.05 + 0.02));

  const std::size_t d = 64;
  const PureState flat = PureState::normalized(ComplexVector::Ones(d));
  const double delta = 0.2;
  const double window = pdelta_window(d, delta);
  int count = 0;
  for (std::size_t k = 0; k < d; ++k) count += std::abs(label_of(k, d)) <= window ? 1 : 0;
  const MembershipReport rf = pdelta_membership(flat, delta, 0.1);
  CHECK(std::abs(rf.p_delta_expectation - count / static_cast<double>(d)) <= 1e-12);
  CHECK_FALSE(rf.member);

  // the flat vector is the j = 0 Fourier mode
  CHECK(pdelta_membership(flat, delta, 0.01, MembershipBasis::Fourier).member);

  const WeylPair p = clock_shift_pair(64);
  const MembershipReport rg = pdelta_membership(ground(p), 0.5, 0.01);
  CHECK(rg.member);
  CHECK(rg.measured_epsilon < 1e-4);
  CHECK(rg.member == (rg.p_delta_expectation > 1.0 - rg.epsilon));
}

TEST_CASE("lemma1_check") {
  const PureState zero = PureState::basis(8, slot_of(0, 8));
  const Lemma1Result r0 = lemma1_check(zero, 0.1, 0.01, clock(8));
  CHECK(r0.holds);
  CHECK_FALSE(r0.vacuous);
  CHECK(std::abs(r0.delta_u2) <= 1e-15);

  const WeylPair p = clock_shift_pair(32);
  const PureState g = ground(p);
  const double eps = pdelta_membership(g, 0.5, 1.0).measured_epsilon + 1e-9;
  const Lemma1Result rg = lemma1_check(g, 0.5, eps, p.u());
  CHECK_FALSE(rg.vacuous);
  CHECK(rg.holds);
  CHECK(rg.margin > 0.0);

  const PureState far = PureState::basis(32, slot_of(12, 32));
  const Lemma1Result rv = lemma1_check(far, 0.1, 0.01, p.u());
  CHECK(rv.vacuous);
  CHECK(rv.holds);
}

TEST_CASE("center_translation") {
  const WeylPair p = clock_shift_pair(64);
  const PureState g = ground(p);
  const CenterTranslation c0 = center_translation(g, 0.5, p);
  CHECK(c0.k == 0);
  CHECK(c0.centered);

  const PureState moved = PureState::normalized(unitary_power(p.v(), 9) * g.amplitudes());
  const CenterTranslation c = center_translation(moved, 0.5, p);
  CHECK(c.k == 64 - 9);
  CHECK((c.psi.amplitudes() - g.amplitudes()).norm() <= 1e-10);

  const WeylPair p16 = clock_shift_pair(16);
  const PureState g16 = ground(p16);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const long long k = static_cast<long long>(s % 16);
    ComplexVector x = unitary_power(p16.v(), k) * g16.amplitudes();
    x += 0.05 * haar_random_state(16, s).amplitudes();
    const CenterTranslation r = center_translation(PureState::normalized(x), 0.5, p16);
    CHECK(r.measured_epsilon <= r.epsilon_bound);
    CHECK(r.centered);
  }
}

TEST_CASE("hermitian_mp_bound") {
  const std::size_t d = 16;
  const WeylPair p = clock_shift_pair(d);
  const ComplexMatrix u = generator(p.u());
  const ComplexMatrix v = generator(p.v());

  const PureState eig = PureState::basis(d, slot_of(2, d));
  for (int s : {+1, -1}) {
    const HermitianBound b = hermitian_mp_bound(eig, u, v, s);
    CHECK(std::abs(b.rhs - orthogonal_weight(eig, u - Complex(0.0, s) * v)) <= 1e-10);
    CHECK(b.slack() >= -1e-10);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PureState psi = haar_random_state(d, seed);
    for (int s : {+1, -1}) {
      const HermitianBound b = hermitian_mp_bound(psi, u, v, s);
      CHECK(b.slack() >= -1e-10);
      CHECK(b.parallelogram_slack() >= -1e-10);
    }
  }
  CHECK_THROWS_AS(hermitian_mp_bound(eig, u, v, 0), Error);
}

TEST_CASE("mus_limit_residual and series") {
  const WeylPair p128 = clock_shift_pair(128);
  const PureState g128 = ground(p128);
  const ComplexMatrix u128 = generator(p128.u());
  const ComplexMatrix v128 = generator(p128.v());
  const double r128 = mus_limit_residual(g128, u128, v128);
  CHECK(r128 <= 0.05);

  const WeylPair p32 = clock_shift_pair(32);
  const PureState g32 = ground(p32);
  const ComplexMatrix u32 = generator(p32.u());
  const ComplexMatrix v32 = generator(p32.v());
  CHECK(r128 <= mus_limit_residual(g32, u32, v32));

  const double s32 = series_residual(g32, p32.u(), p32.v(), u32, v32);
  const double s128 = series_residual(g128, p128.u(), p128.v(), u128, v128);
  // consistent with O(d^{-3/2}) or faster
  CHECK(s128 <= s32 * std::pow(4.0, -1.5) * 1.5);

  CHECK_THROWS_AS(mus_limit_residual(PureState::basis(32, 0), u32, v32), Error);
}

TEST_CASE("asymptotic_gap") {
  const AsymptoticRecord r8 = asymptotic_gap(8, AsymptoticFamily::HarperGround);
  CHECK(r8.d == 8);
  CHECK(r8.sum > 0.0);
  const AsymptoticRecord r32 = asymptotic_gap(32, AsymptoticFamily::HarperGround);
  const AsymptoticRecord r64 = asymptotic_gap(64, AsymptoticFamily::HarperGround);
  const AsymptoticRecord r128 = asymptotic_gap(128, AsymptoticFamily::HarperGround);
  CHECK(r64.gap_hermitian <= r32.gap_hermitian);
  CHECK(r128.gap_hermitian <= r64.gap_hermitian);
  CHECK(r64.gap_ur1 <= r32.gap_ur1);
  CHECK(r128.gap_ur1 <= r64.gap_ur1);
  CHECK(r128.hermitian_slack >= -1e-10);
  const AsymptoticRecord t = asymptotic_gap(32, AsymptoticFamily::ThetaSweep, 0.3);
  CHECK(t.theta == doctest::Approx(0.3));
  CHECK(family_name(t.family) == "theta-sweep");
}
