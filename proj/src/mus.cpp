#include "urbound/mus.hpp"

#include <cmath>
#include <limits>

#include "urbound/bounds.hpp"
#include "urbound/parallel.hpp"
#include "urbound/random.hpp"
#include "urbound/uncertainty.hpp"

namespace urbound {

namespace {

constexpr double kVarianceGuard = 1e-10;
constexpr double kImagTol = 1e-6;

void require_nondegenerate(double du2, double dv2) {
  if (du2 <= kVarianceGuard || dv2 <= kVarianceGuard)
    throw Error(Errc::DegenerateVariance, "variance <= 1e-10; psi is (close to) an eigenstate");
}

// (<A> A^dag + <A^dag> A) / 2
ComplexMatrix mean_field(const ComplexMatrix& a, Complex mean) {
  return 0.5 * (mean * a.adjoint() + std::conj(mean) * a);
}

}  // namespace

HarperGround harper_ground(const WeylPair& pair) {
  const EigenDecomposition eig = eig_hermitian(harper(pair));
  HarperGround g{eig.vector(0)};
  g.delta_u2 = variance(g.psi, pair.u());
  g.delta_v2 = variance(g.psi, pair.v());
  g.energy = eig.eigenvalues(0);
  g.spectral_gap = eig.dim() > 1 ? eig.eigenvalues(1) - eig.eigenvalues(0) : 0.0;
  return g;
}

double critical_residual(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  const double du2 = variance(psi, u);
  const double dv2 = variance(psi, v);
  require_nondegenerate(du2, dv2);
  const auto d = static_cast<Eigen::Index>(psi.dim());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix l = 0.5 * ((id - mean_field(u, expectation(psi, u))) / du2 +
                                 (id - mean_field(v, expectation(psi, v))) / dv2);
  return (l * psi.amplitudes() - psi.amplitudes()).norm();
}

Realignment realign_phases(const PureState& psi, const WeylPair& pair) {
  const auto d = static_cast<long long>(pair.dim());
  if (psi.dim() != pair.dim()) throw Error(Errc::DimensionMismatch, "realign_phases dimension");

  Realignment best{psi};
  double best_score = -std::numeric_limits<double>::infinity();
  double best_imag = std::numeric_limits<double>::infinity();
  bool found = false;
  // U^a for every a, then V^{-b} applied incrementally.
  const ComplexMatrix vd = pair.v().adjoint();
  ComplexVector col_a = psi.amplitudes();
  for (long long a = 0; a < d; ++a) {
    ComplexVector cand = col_a;
    for (long long b = 0; b < d; ++b) {
      const PureState phi = PureState::normalized(cand);
      const Complex eu = expectation(phi, pair.u());
      const Complex ev = expectation(phi, pair.v());
      const double imag = std::abs(eu.imag()) + std::abs(ev.imag());
      const double score = eu.real() + ev.real();
      if (imag <= kImagTol) {
        if (!found || score > best_score + 1e-12) {
          found = true;
          best_score = score;
          best = Realignment{phi, a, b, true};
        }
      } else if (!found && imag < best_imag) {
        best_imag = imag;
        best = Realignment{phi, a, b, false};
      }
      cand = vd * cand;
    }
    col_a = pair.u() * col_a;
  }
  // the loop builds V^{-b} U^a psi, which differs from U^a V^{-b} psi by a global phase
  best.psi = PureState::normalized(translation(pair, best.a, best.b) * psi.amplitudes());
  return best;
}

double squeezing_theta(double delta_u2, double delta_v2) {
  const double c1 = delta_v2 * std::sqrt(std::max(0.0, 1.0 - delta_u2));
  const double c2 = delta_u2 * std::sqrt(std::max(0.0, 1.0 - delta_v2));
  if (c1 == 0.0 && c2 == 0.0) return 0.0;
  return std::atan2(c2, c1);
}

TiltedStationarity tilted_stationarity_check(const PureState& psi, const WeylPair& pair) {
  const Complex eu = expectation(psi, pair.u());
  const Complex ev = expectation(psi, pair.v());
  const double du2 = variance(psi, pair.u());
  const double dv2 = variance(psi, pair.v());
  require_nondegenerate(du2, dv2);

  TiltedStationarity out;
  out.theta = squeezing_theta(du2, dv2);
  const double c = std::cos(out.theta);
  const double s = std::sin(out.theta);
  const ComplexMatrix lhs_op = c * cosine_part(std::polar(1.0, -std::arg(eu)) * pair.u()) +
                               s * cosine_part(std::polar(1.0, -std::arg(ev)) * pair.v());
  const ComplexVector lhs = lhs_op * psi.amplitudes();
  const double abs_u = std::abs(eu);
  const double abs_v = std::abs(ev);
  const double c1 = dv2 * abs_u;
  const double c2 = du2 * abs_v;
  const double exact = (du2 + dv2 - 2.0 * du2 * dv2) / std::hypot(c1, c2);

  auto residual = [&](double lambda) { return (lhs - lambda * psi.amplitudes()).norm(); };
  out.printed_residual = residual(c * abs_v + s * abs_u);
  out.swapped_residual = residual(c * abs_u + s * abs_v);
  out.exact_residual = residual(exact);
  return out;
}

MusRecord mus_record(std::size_t d, std::uint64_t seed) {
  const WeylPair pair = clock_shift_pair(d);
  const HarperGround ground = harper_ground(pair);
  const Realignment aligned = realign_phases(ground.psi, pair);
  const PureState& psi = aligned.psi;
  const ComplexMatrix& u = pair.u();
  const ComplexMatrix& v = pair.v();

  MusRecord r;
  r.d = d;
  r.delta_u2 = variance(psi, u);
  r.delta_v2 = variance(psi, v);
  r.ur1_half = 0.5 * ur1(psi, u, v);
  r.ur2_half = 0.5 * ur2_best(psi, u, v).value;
  r.ur3_half = 0.5 * ur3(psi, u, v);
  r.ground_energy = ground.energy;
  r.residual = critical_residual(psi, u, v);
  r.realign_a = aligned.a;
  r.realign_b = aligned.b;
  r.aligned = aligned.aligned;
  r.spectral_gap = ground.spectral_gap;
  r.ur1_weak_half = 0.5 * ur1_weak_cos(psi, u, v);
  r.ur2_sampled_half = 0.5 * ur2_sampled(psi, u, v, 20, derive_seed(seed, d)).value;
  r.ur2_floor_half = 0.5 * ur2_floor(psi, u, v);
  return r;
}

std::vector<MusRecord> mus_table(std::size_t d_min, std::size_t d_max, std::uint64_t seed) {
  if (d_min < 2 || d_max < d_min)
    throw Error(Errc::BadDimension, "mus_table needs 2 <= d_min <= d_max");
  std::vector<MusRecord> rows(d_max - d_min + 1);
  parallel_for(rows.size(), [&](std::size_t i) { rows[i] = mus_record(d_min + i, seed); });
  return rows;
}

}  // namespace urbound
