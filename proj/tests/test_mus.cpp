#include <doctest.h>

#include <cmath>

#include "urbound/mus.hpp"
#include "urbound/random.hpp"
#include "urbound/uncertainty.hpp"

using namespace urbound;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::BadDimension;
}

PureState translate(const WeylPair& p, const PureState& psi, long long m, long long n) {
  return PureState::normalized(translation(p, m, n) * psi.amplitudes());
}

}  // namespace

TEST_CASE("harper_ground reference variances") {
  const std::vector<std::pair<std::size_t, double>> rows = {{2, 0.5}, {6, 0.401089}, {7, 0.358678}};
  for (const auto& [d, du2] : rows) {
    const WeylPair p = clock_shift_pair(d);
    const HarperGround g = harper_ground(p);
    CHECK(std::abs(g.delta_u2 - du2) <= 1e-6);
    CHECK(std::abs(g.delta_u2 - g.delta_v2) <= 1e-8);
    CHECK(g.spectral_gap > 0.0);
  }
  CHECK(std::abs(harper_ground(clock_shift_pair(2)).energy + std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("critical_residual") {
  const WeylPair p3 = clock_shift_pair(3);
  const Realignment g = realign_phases(harper_ground(p3).psi, p3);
  CHECK(critical_residual(g.psi, p3.u(), p3.v()) <= 1e-8);
  CHECK(code_of([&] { critical_residual(PureState::basis(3, 0), p3.u(), p3.v()); }) ==
        Errc::DegenerateVariance);

  // non-degenerate excited levels are critical too
  for (std::size_t d : {5u, 6u, 7u}) {
    const WeylPair p = clock_shift_pair(d);
    const EigenDecomposition e = eig_hermitian(harper(p));
    for (std::size_t k = 1; k < e.dim(); ++k) {
      const double below = e.eigenvalues(static_cast<Eigen::Index>(k)) - e.eigenvalues(static_cast<Eigen::Index>(k - 1));
      const double above = k + 1 < e.dim() ? e.eigenvalues(static_cast<Eigen::Index>(k + 1)) - e.eigenvalues(static_cast<Eigen::Index>(k)) : 1.0;
      if (below < 1e-6 || above < 1e-6) continue;
      const PureState psi = realign_phases(e.vector(k), p).psi;
      const double du = variance(psi, p.u());
      const double dv = variance(psi, p.v());
      if (du <= 1e-10 || dv <= 1e-10) continue;
      CHECK(critical_residual(psi, p.u(), p.v()) <= 1e-6);
    }
  }
}

TEST_CASE("realign_phases") {
  const WeylPair p5 = clock_shift_pair(5);
  const PureState g = harper_ground(p5).psi;
  const Realignment same = realign_phases(g, p5);
  CHECK(same.a == 0);
  CHECK(same.b == 0);
  CHECK(same.aligned);

  const PureState moved = translate(p5, g, 2, 3);
  const Realignment back = realign_phases(moved, p5);
  CHECK(back.aligned);
  const Complex eu = expectation(back.psi, p5.u());
  const Complex ev = expectation(back.psi, p5.v());
  CHECK(std::abs(eu.imag()) + std::abs(ev.imag()) <= 1e-6);
  CHECK(eu.real() > 0.0);
  CHECK(ev.real() > 0.0);
  CHECK(std::abs(variance(back.psi, p5.u()) - variance(moved, p5.u())) <= 1e-12);

  const WeylPair p4 = clock_shift_pair(4);
  const PureState r = haar_random_state(4, 3);
  for (long long m = 0; m < 4; ++m)
    for (long long n = 0; n < 4; ++n) {
      const PureState t = translate(p4, r, m, n);
      CHECK(std::abs(variance(t, p4.u()) - variance(r, p4.u())) <= 1e-12);
      CHECK(std::abs(variance(t, p4.v()) - variance(r, p4.v())) <= 1e-12);
    }
}

TEST_CASE("realign_phases flags states without a real alignment") {
  ComplexVector x(3);
  x << 1.0, Complex(0.0, 1.0), 0.4;
  const Realignment r = realign_phases(PureState::normalized(x), clock_shift_pair(3));
  CHECK_FALSE(r.aligned);
}

TEST_CASE("squeezing_theta") {
  CHECK(std::abs(squeezing_theta(0.4, 0.4) - kPi / 4.0) <= 1e-15);
  CHECK(std::abs(squeezing_theta(0.0, 0.5) - 0.0) <= 1e-15);
  CHECK(std::abs(squeezing_theta(0.5, 0.0) - kPi / 2.0) <= 1e-15);
  const double expected = std::atan2(0.2 * std::sqrt(0.4), 0.6 * std::sqrt(0.8));
  CHECK(std::abs(squeezing_theta(0.2, 0.6) - expected) <= 1e-15);
}

TEST_CASE("tilted_stationarity_check") {
  const WeylPair p2 = clock_shift_pair(2);
  const TiltedStationarity t = tilted_stationarity_check(harper_ground(p2).psi, p2);
  CHECK(t.printed_residual <= 1e-8);
  CHECK(t.swapped_residual <= 1e-8);
  CHECK(t.exact_residual <= 1e-8);

  const WeylPair p5 = clock_shift_pair(5);
  const TiltedStationarity rnd = tilted_stationarity_check(haar_random_state(5, 4), p5);
  CHECK(rnd.printed_residual > 1e-3);
  CHECK(rnd.swapped_residual > 1e-3);
  CHECK(code_of([&] { tilted_stationarity_check(PureState::basis(5, 0), p5); }) ==
        Errc::DegenerateVariance);
}

TEST_CASE("mus_table rows") {
  const std::vector<MusRecord> rows = mus_table(2, 8);
  REQUIRE(rows.size() == 7);
  CHECK(std::abs(rows[0].delta_u2 - 0.5) <= 1e-9);
  CHECK(std::abs(rows[0].ur1_half - 0.5) <= 1e-9);
  CHECK(std::abs(rows[0].ur2_half - 0.5) <= 1e-9);
  CHECK(std::abs(rows[0].ur3_half - 0.5) <= 1e-9);
  CHECK(std::abs(rows[2].delta_u2 - 0.5) <= 1e-6);
  CHECK(std::abs(rows[2].ur1_weak_half - 0.416667) <= 1e-6);
  const MusRecord& r8 = rows[6];
  CHECK(std::abs(r8.delta_u2 - 0.323223) <= 1e-6);
  CHECK(std::abs(r8.ur1_weak_half - 0.276769) <= 1e-6);
  CHECK(std::abs(r8.ur3_half - 0.191461) <= 1e-6);
  CHECK(r8.ur2_floor_half <= 0.314628);
  CHECK(0.314628 <= r8.ur2_half);
  for (const MusRecord& r : rows) {
    CHECK(std::abs(r.delta_u2 - r.delta_v2) <= 1e-8);
    CHECK(r.residual <= 1e-8);
    CHECK(r.aligned);
  }
  CHECK_THROWS_AS(mus_table(1, 3), Error);
}

TEST_CASE("Harper ground beats sampled states under the symmetric constraint") {
  for (std::size_t d = 2; d <= 8; ++d) {
    const WeylPair p = clock_shift_pair(d);
    const HarperGround g = harper_ground(p);
    const double sum0 = g.delta_u2 + g.delta_v2;
    const double prod0 = g.delta_u2 * g.delta_v2;
    for (std::uint64_t s = 0; s < 200; ++s) {
      const PureState psi = haar_random_state(d, 1000 * d + s);
      const double worst = std::max(variance(psi, p.u()), variance(psi, p.v()));
      CHECK(sum0 <= 2.0 * worst + 1e-12);
      CHECK(prod0 <= worst * worst + 1e-12);
    }
  }
}

TEST_CASE("mixtures are no less uncertain than their best pure component") {
  const WeylPair p = clock_shift_pair(4);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::vector<double> w = {0.5, 0.3, 0.2};
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    double best_sum = 1e9;
    double best_prod = 1e9;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const PureState psi = haar_random_state(4, 10 * s + i);
      rho += w[i] * psi.projector();
      const double a = variance(psi, p.u());
      const double b = variance(psi, p.v());
      best_sum = std::min(best_sum, a + b);
      best_prod = std::min(best_prod, a * b);
    }
    const DensityMatrix mixed(rho);
    const double a = variance(mixed, p.u());
    const double b = variance(mixed, p.v());
    CHECK(a + b >= best_sum - 1e-12);
    CHECK(a * b >= best_prod - 1e-12);
  }
}
