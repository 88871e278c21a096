#include "urbound/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "urbound/mus.hpp"
#include "urbound/uncertainty.hpp"
#include "urbound/bounds.hpp"

namespace urbound {

namespace {

constexpr double kClusterTol = 1e-8;
constexpr double kVarianceGuard = 1e-10;

double scale_factor(std::size_t d) { return std::sqrt(2.0 * kPi / static_cast<double>(d)); }

}  // namespace

UnitaryEigen unitary_eig(const ComplexMatrix& u) {
  require_square(u, "unitary_eig");
  if (!is_unitary(u)) throw Error(Errc::NotUnitary, "unitary_eig needs a unitary matrix");
  const Eigen::Index d = u.rows();
  const ComplexMatrix k1 = 0.5 * (u + u.adjoint());
  const ComplexMatrix k2 = (u - u.adjoint()) / Complex(0.0, 2.0);
  const EigenDecomposition e1 = eig_hermitian(k1);
  ComplexMatrix x = e1.eigenvectors;

  Eigen::Index start = 0;
  while (start < d) {
    Eigen::Index end = start + 1;
    while (end < d && e1.eigenvalues(end) - e1.eigenvalues(end - 1) <= kClusterTol) ++end;
    const Eigen::Index n = end - start;
    if (n > 1) {
      const ComplexMatrix block = x.middleCols(start, n);
      ComplexMatrix restricted = block.adjoint() * k2 * block;
      restricted = 0.5 * (restricted + restricted.adjoint()).eval();
      const EigenDecomposition e2 = eig_hermitian(restricted);
      x.middleCols(start, n) = block * e2.eigenvectors;
    }
    start = end;
  }

  UnitaryEigen out;
  out.vectors = x;
  out.phases.resize(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex lambda = x.col(k).dot(u * x.col(k));
    double phase = std::arg(lambda);
    if (phase >= kPi - 1e-9) phase -= 2.0 * kPi;
    out.phases(k) = phase;
  }
  return out;
}

ComplexMatrix generator(const ComplexMatrix& u) {
  const UnitaryEigen e = unitary_eig(u);
  const double a = scale_factor(static_cast<std::size_t>(u.rows()));
  const RealVector labels = e.phases / a;
  ComplexMatrix h = e.vectors * labels.cast<Complex>().asDiagonal() * e.vectors.adjoint();
  return 0.5 * (h + h.adjoint());
}

ComplexMatrix unitary_from_generator(const ComplexMatrix& h) {
  const EigenDecomposition e = eig_hermitian(h);
  const double a = scale_factor(e.dim());
  ComplexVector phases(static_cast<Eigen::Index>(e.dim()));
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, a * e.eigenvalues(k));
  return e.eigenvectors * phases.asDiagonal() * e.eigenvectors.adjoint();
}

double pdelta_window(std::size_t d, double delta) {
  return (2.0 / kPi) * static_cast<double>(d / 2) * delta;
}

ComplexMatrix pdelta_projector(std::size_t d, double delta, MembershipBasis basis) {
  if (d < 2) throw Error(Errc::BadDimension, "pdelta_projector needs d >= 2");
  const double window = pdelta_window(d, delta);
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (std::size_t s = 0; s < d; ++s)
    if (std::abs(label_of(s, d)) <= window + 1e-12) p(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = 1.0;
  if (basis == MembershipBasis::Fourier) {
    const ComplexMatrix f = dft(d);
    p = f * p * f.adjoint();
  }
  return p;
}

MembershipReport pdelta_membership(const PureState& psi, double delta, double epsilon,
                                   MembershipBasis basis) {
  MembershipReport r;
  r.d = psi.dim();
  r.delta = delta;
  r.epsilon = epsilon;
  r.p_delta_expectation = expectation(psi, pdelta_projector(psi.dim(), delta, basis)).real();
  r.member = r.p_delta_expectation > 1.0 - epsilon;
  r.variance_bound = 0.5 * delta * delta + 2.0 * epsilon;
  r.measured_epsilon = 1.0 - r.p_delta_expectation;
  return r;
}

Lemma1Result lemma1_check(const PureState& psi, double delta, double epsilon,
                          const ComplexMatrix& u) {
  if (psi.dim() != static_cast<std::size_t>(u.rows()))
    throw Error(Errc::DimensionMismatch, "lemma1_check dimension");
  const std::size_t d = psi.dim();
  const UnitaryEigen e = unitary_eig(u);
  const double window = pdelta_window(d, delta);
  double weight = 0.0;
  for (Eigen::Index k = 0; k < e.phases.size(); ++k) {
    const double label = e.phases(k) * static_cast<double>(d) / (2.0 * kPi);
    if (std::abs(label) <= window + 1e-9) weight += std::norm(e.vectors.col(k).dot(psi.amplitudes()));
  }
  Lemma1Result r;
  r.delta_u2 = variance(psi, u);
  r.margin = 0.5 * delta * delta + 2.0 * epsilon - r.delta_u2;
  r.vacuous = !(weight > 1.0 - epsilon);
  r.holds = r.vacuous || r.margin >= 0.0;
  return r;
}

CenterTranslation center_translation(const PureState& psi, double delta, const WeylPair& pair) {
  const std::size_t d = pair.dim();
  if (psi.dim() != d) throw Error(Errc::DimensionMismatch, "center_translation dimension");
  const ComplexMatrix p = pdelta_projector(d, delta, MembershipBasis::Computational);
  CenterTranslation best{0, psi};
  best.measured_epsilon = std::numeric_limits<double>::infinity();
  ComplexVector cur = psi.amplitudes();
  for (std::size_t k = 0; k < d; ++k) {
    const PureState phi = PureState::normalized(cur);
    const double eps = 1.0 - expectation(phi, p).real();
    if (eps < best.measured_epsilon - 1e-14) {
      best.k = static_cast<long long>(k);
      best.psi = phi;
      best.measured_epsilon = eps;
    }
    cur = pair.v() * cur;
  }
  const double s = std::sin(0.5 * delta);
  const double dd = static_cast<double>(d);
  best.epsilon_bound = (variance(psi, pair.u()) + kPi * kPi / (dd * dd)) / (s * s);
  best.centered = best.measured_epsilon < best.epsilon_bound;
  return best;
}

double hermitian_variance(const PureState& psi, const ComplexMatrix& h) {
  const double mean = expectation(psi, h).real();
  return std::max(0.0, expectation(psi, h * h).real() - mean * mean);
}

HermitianBound hermitian_mp_bound(const PureState& psi, const ComplexMatrix& u,
                                  const ComplexMatrix& v, int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::BadDimension, "sign must be +1 or -1");
  const double s = sign;
  const Complex i(0.0, 1.0);
  HermitianBound b;
  b.lhs = hermitian_variance(psi, u) + hermitian_variance(psi, v);
  const double comm = (s * i * expectation(psi, commutator(u, v))).real();
  b.rhs = comm + orthogonal_weight(psi, u - s * i * v);
  b.parallelogram_rhs = 0.5 * hermitian_variance(psi, u + v);
  return b;
}

double mus_limit_residual(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  const double du2 = hermitian_variance(psi, u);
  const double dv2 = hermitian_variance(psi, v);
  if (du2 <= kVarianceGuard || dv2 <= kVarianceGuard)
    throw Error(Errc::DegenerateVariance, "Hermitian variance <= 1e-10");
  const auto n = u.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix cu = u - expectation(psi, u).real() * id;
  const ComplexMatrix cv = v - expectation(psi, v).real() * id;
  const ComplexVector& x = psi.amplitudes();
  const ComplexVector lhs = 0.5 * (cu * (cu * x) / du2 + cv * (cv * x) / dv2);
  return (lhs - x).norm();
}

double series_residual(const PureState& psi, const ComplexMatrix& big_u,
                       const ComplexMatrix& big_v, const ComplexMatrix& u,
                       const ComplexMatrix& v) {
  const double a = scale_factor(psi.dim());
  const Complex i(0.0, 1.0);
  const Complex exact = expectation(psi, big_u.adjoint() * big_v);
  const Complex series =
      1.0 + i * a * (expectation(psi, v) - expectation(psi, u)) +
      0.5 * a * a *
          (2.0 * expectation(psi, u * v) - expectation(psi, u * u) - expectation(psi, v * v));
  return std::abs(exact - series);
}

std::string family_name(AsymptoticFamily family) {
  return family == AsymptoticFamily::HarperGround ? "harper-ground" : "theta-sweep";
}

AsymptoticRecord asymptotic_gap(std::size_t d, AsymptoticFamily family, double theta) {
  const WeylPair pair = clock_shift_pair(d);
  AsymptoticRecord r;
  r.d = d;
  r.family = family;
  r.theta = family == AsymptoticFamily::ThetaSweep ? theta : 0.0;

  PureState psi = PureState::basis(d, slot_of(0, d));
  if (family == AsymptoticFamily::HarperGround) {
    psi = realign_phases(harper_ground(pair).psi, pair).psi;
  } else {
    ComplexVector x = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    x(static_cast<Eigen::Index>(slot_of(0, d))) = std::cos(theta);
    x(static_cast<Eigen::Index>(slot_of(-1, d))) = -std::sin(theta);
    psi = PureState::normalized(x);
  }

  const ComplexMatrix u = generator(pair.u());
  const ComplexMatrix v = generator(pair.v());
  r.sum = variance(psi, pair.u()) + variance(psi, pair.v());
  r.delta_uh2 = hermitian_variance(psi, u);
  r.delta_vh2 = hermitian_variance(psi, v);
  r.scaled = 2.0 * kPi / static_cast<double>(d) * (r.delta_uh2 + r.delta_vh2);
  r.ur1 = ur1(psi, pair.u(), pair.v());
  r.gap_hermitian = std::abs(r.sum - r.scaled) / r.sum;
  r.gap_ur1 = (r.sum - r.ur1) / r.sum;
  r.limit_residual = mus_limit_residual(psi, u, v);
  r.series_residual = series_residual(psi, pair.u(), pair.v(), u, v);
  r.hermitian_slack = std::min(hermitian_mp_bound(psi, u, v, +1).slack(),
                               hermitian_mp_bound(psi, u, v, -1).slack());
  return r;
}

}  // namespace urbound
