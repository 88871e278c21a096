#include <doctest.h>

#include <cmath>

#include "urbound/mus.hpp"
#include "urbound/operators.hpp"
#include "urbound/random.hpp"
#include "urbound/uncertainty.hpp"

using namespace urbound;

namespace {

PureState slot(std::size_t d, long long label) { return PureState::basis(d, slot_of(label, d)); }

PureState harper2() { return harper_ground(clock_shift_pair(2)).psi; }

}  // namespace

TEST_CASE("variance examples") {
  CHECK(variance(slot(3, 0), clock(3)) == doctest::Approx(0.0));
  CHECK(variance(slot(3, 0), shift(3)) == doctest::Approx(1.0));
  const WeylPair p5 = clock_shift_pair(5);
  CHECK(std::abs(variance(harper_ground(p5).psi, p5.u()) - 0.450012) < 1e-6);
  try {
    variance(slot(3, 0), clock(4));
    FAIL("dimension mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("visibility") {
  CHECK(visibility(slot(3, 1), clock(3)) == doctest::Approx(1.0));
  CHECK(visibility(slot(3, 0), shift(3)) == doctest::Approx(0.0));
  CHECK(std::abs(visibility(harper2(), clock(2)) - std::sqrt(0.5)) < 1e-12);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const PureState psi = haar_random_state(6, s);
    const ComplexMatrix w = haar_random_unitary(6, s + 100);
    const double vis = visibility(psi, w);
    CHECK(std::abs(vis * vis + variance(psi, w) - 1.0) <= 1e-12);
  }
}

TEST_CASE("variance range and concavity") {
  const ComplexMatrix u = haar_random_unitary(5, 3);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const PureState psi = haar_random_state(5, s);
    const double v = variance(psi, u);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::vector<double> p = {0.2, 0.5, 0.3};
    ComplexMatrix rho = ComplexMatrix::Zero(5, 5);
    double mixed_of_pure = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const PureState psi = haar_random_state(5, 1000 + 10 * s + i);
      rho += p[i] * psi.projector();
      mixed_of_pure += p[i] * variance(psi, u);
    }
    CHECK(variance(DensityMatrix(rho), u) >= mixed_of_pure - 1e-12);
  }
}

TEST_CASE("fubini_study") {
  const PureState a = haar_random_state(6, 1);
  CHECK(fubini_study(a, a) == doctest::Approx(0.0));
  CHECK(fubini_study(slot(4, 0), slot(4, 1)) == doctest::Approx(4.0));
  const ComplexMatrix u = haar_random_unitary(6, 2);
  const PureState ua = PureState::normalized(u * a.amplitudes());
  CHECK(std::abs(fubini_study(a, ua) / 4.0 - variance(a, u)) <= 1e-12);
  const PureState b = haar_random_state(6, 3);
  const ComplexMatrix w = haar_random_unitary(6, 4);
  const PureState wa = PureState::normalized(w * a.amplitudes());
  const PureState wb = PureState::normalized(w * b.amplitudes());
  CHECK(std::abs(fubini_study(wa, wb) - fubini_study(a, b)) <= 1e-12);
}

TEST_CASE("covariance") {
  const PureState psi = haar_random_state(4, 8);
  const ComplexMatrix u = haar_random_unitary(4, 9);
  const Complex c = covariance(psi, u, u);
  CHECK(std::abs(c.imag()) <= 1e-14);
  CHECK(std::abs(c.real() - variance(psi, u)) <= 1e-12);
  CHECK(std::abs(covariance(slot(3, 1), clock(3), clock(3) * clock(3))) <= 1e-14);

  const Complex c2 = covariance(harper2(), clock(2), shift(2));
  CHECK(std::abs(c2 - Complex(-0.5, 0.0)) <= 1e-12);

  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  CHECK(std::abs(covariance(rho, u, shift(4)) - covariance(psi, u, shift(4))) <= 1e-12);
}

TEST_CASE("bargmann3") {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const BargmannTriple one = bargmann3(haar_random_state(3, 1), id, id);
  CHECK(std::abs(one.value - 1.0) <= 1e-12);
  CHECK(std::abs(one.phase) <= 1e-12);

  const BargmannTriple zero = bargmann3(slot(3, 0), clock(3), shift(3));
  CHECK(zero.phase_undefined);
  CHECK(zero.modulus <= 1e-14);
  CHECK(zero.cos_phase() == 0.0);
  CHECK(zero.real_part() == 0.0);

  const PureState psi = haar_random_state(5, 4);
  const PureState rotated(psi.amplitudes() * std::polar(1.0, 0.7));
  const WeylPair p = clock_shift_pair(5);
  const BargmannTriple b1 = bargmann3(psi, p.u(), p.v());
  const BargmannTriple b2 = bargmann3(rotated, p.u(), p.v());
  CHECK(std::abs(b1.value - b2.value) <= 1e-14);

  const double du = variance(psi, p.u());
  const double dv = variance(psi, p.v());
  const double overlap = std::abs(expectation(psi, p.u().adjoint() * p.v()));
  CHECK(std::abs(b1.modulus - std::sqrt((1 - du) * (1 - dv)) * overlap) <= 1e-12);
  CHECK(std::abs(b1.modulus * std::cos(b1.phase) - b1.value.real()) <= 1e-14);
}

TEST_CASE("gvariance") {
  const PureState psi = haar_random_state(4, 5);
  const ComplexMatrix u = haar_random_unitary(4, 6);
  CHECK(std::abs(gvariance(psi, u) - variance(psi, u)) <= 1e-12);
  CHECK(std::abs(gvariance(psi, u.adjoint()) - variance(psi, u)) <= 1e-12);
  const PureState g = harper2();
  CHECK(std::abs(gvariance(g, clock(2) + shift(2))) <= 1e-12);
  CHECK(std::abs(gvariance(g, clock(2) - shift(2)) - 2.0) <= 1e-12);
}

TEST_CASE("vaidman_perp") {
  try {
    vaidman_perp(slot(3, 0), ComplexMatrix::Identity(3, 3));
    FAIL("eigenvector accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateDecomposition);
  }
  const VaidmanDecomposition x = vaidman_perp(PureState::basis(2, 0), pauli_x());
  CHECK(std::abs(x.mean) <= 1e-15);
  CHECK(x.dev == doctest::Approx(1.0));
  CHECK(std::abs(std::abs(x.perp[1]) - 1.0) <= 1e-15);

  const PureState psi = haar_random_state(7, 12);
  const ComplexMatrix a = haar_random_unitary(7, 13) + 0.3 * haar_random_unitary(7, 14);
  const VaidmanDecomposition v = vaidman_perp(psi, a);
  const ComplexVector rebuilt = v.mean * psi.amplitudes() + v.dev * v.perp.amplitudes();
  CHECK((a * psi.amplitudes() - rebuilt).norm() <= 1e-12);
  CHECK(std::abs(psi.inner(v.perp)) <= 1e-12);
  CHECK(std::abs(v.dev * v.dev - orthogonal_weight(psi, a)) <= 1e-12);
}
