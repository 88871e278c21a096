#include "urbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "urbound/operators.hpp"
#include "urbound/random.hpp"

namespace urbound {

namespace {

constexpr double kDenominatorGuard = 1e-12;
constexpr Complex kI(0.0, 1.0);

void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::BadDimension, "sign must be +1 or -1");
}

double weak_form(double overlap, double abs_cos) {
  const double denom = 1.0 - overlap * abs_cos;
  if (denom <= kDenominatorGuard)
    throw Error(Errc::DegenerateDenominator, "1 - |<psi_U|psi_V>||cos Phi3| vanishes");
  return 1.0 + (overlap * overlap - overlap * abs_cos) / denom;
}

double saturating_tau(double ab) { return ab >= 0.0 ? 1.0 : -1.0; }

}  // namespace

double ur1(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  const BargmannTriple b3 = bargmann3(psi, u, v);
  const double overlap = std::abs(expectation(psi, u.adjoint() * v));
  const double du = variance(psi, u);
  const double dv = variance(psi, v);
  const double cross = b3.phase_undefined
                           ? 0.0
                           : 2.0 * b3.cos_phase() * std::sqrt((1.0 - du) * (1.0 - dv)) * overlap;
  return 1.0 + overlap * overlap - cross;
}

double ur1(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v) {
  const ComplexMatrix ud = u.adjoint();
  const ComplexMatrix vd = v.adjoint();
  const Complex udv = expectation(rho, ud * v);
  const Complex vdu = expectation(rho, vd * u);
  const Complex eu = expectation(rho, u);
  const Complex ev = expectation(rho, v);
  const Complex eud = expectation(rho, ud);
  const Complex evd = expectation(rho, vd);
  const Complex value = 1.0 + std::norm(udv) - udv * eu * evd - vdu * ev * eud;
  if (std::abs(value.imag()) > 1e-10)
    throw Error(Errc::NotHermitian, "mixed-state UR-1 picked up an imaginary part above 1e-10");
  return value.real();
}

double ur1_weak_cos(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  const BargmannTriple b3 = bargmann3(psi, u, v);
  const double overlap = std::abs(expectation(psi, u.adjoint() * v));
  return weak_form(overlap, std::abs(b3.cos_phase()));
}

double ur1_weak_mod(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  return 1.0 - std::abs(expectation(psi, u.adjoint() * v));
}

double ur1_weak_mod(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v) {
  return 1.0 - std::abs(expectation(rho, u.adjoint() * v));
}

std::optional<double> ur1_phase_form(const PureState& psi, const ComplexMatrix& u,
                                     const ComplexMatrix& v) {
  const BargmannTriple b3 = bargmann3(psi, u, v);
  const double c = b3.cos_phase();
  if (c < 0.0) return std::nullopt;
  const double d_udv = variance(psi, u.adjoint() * v);
  const double denom = 1.0 - std::sqrt(1.0 - d_udv) * c;
  if (denom <= kDenominatorGuard)
    throw Error(Errc::DegenerateDenominator, "1 - sqrt(1 - D(U^dag V)) |cos Phi3| vanishes");
  return 2.0 - d_udv / denom;
}

double ur2(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v,
           const PureState& perp, int sign) {
  require_sign(sign);
  if (perp.dim() != psi.dim()) throw Error(Errc::DimensionMismatch, "ur2 perp dimension");
  if (std::abs(psi.inner(perp)) > 1e-10)
    throw Error(Errc::NotOrthogonal, "ur2 requires <psi|perp> = 0 to 1e-10");
  const double s = sign;
  const ComplexMatrix op = u.adjoint() + s * kI * v.adjoint();
  const Complex element = psi.amplitudes().dot(op * perp.amplitudes());
  return std::norm(element) - s * 2.0 * covariance(psi, u, v).imag();
}

double ur2_floor(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  const double im = covariance(psi, u, v).imag();
  return std::max(-2.0 * im, 2.0 * im);
}

Ur2Result ur2_best(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  const double im_cov = covariance(psi, u, v).imag();
  const ComplexVector& p = psi.amplitudes();
  Ur2Result best;
  best.value = -std::numeric_limits<double>::infinity();
  int vanished = 0;
  for (const int sign : {+1, -1}) {
    const double s = sign;
    ComplexVector r = (u - s * kI * v) * p;
    r -= p * p.dot(r);
    const double weight = r.squaredNorm();
    double value = -s * 2.0 * im_cov;
    std::optional<PureState> perp;
    if (r.norm() > 1e-12) {
      r -= p * p.dot(r);
      perp = PureState::normalized(r);
      value = ur2(psi, u, v, *perp, sign);
    } else {
      ++vanished;
      value += weight;
    }
    if (value > best.value) {
      best.value = value;
      best.sign = sign;
      best.perp = std::move(perp);
    }
  }
  best.degenerate_perp = vanished == 2;
  return best;
}

Ur2Result ur2_sampled(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v,
                      int count, std::uint64_t seed) {
  if (count < 1) throw Error(Errc::BadDimension, "ur2_sampled needs at least one sample");
  Ur2Result best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    PureState perp = random_perp(psi, derive_seed(seed, static_cast<std::uint64_t>(i)));
    for (const int sign : {+1, -1}) {
      const double value = ur2(psi, u, v, perp, sign);
      if (value > best.value) {
        best.value = value;
        best.sign = sign;
        best.perp = perp;
      }
    }
  }
  return best;
}

double ur3(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  // An eigenvector of U +/- V has zero orthogonal weight, which is that branch's value.
  const double plus = orthogonal_weight(psi, u + v);
  const double minus = orthogonal_weight(psi, u - v);
  return 0.5 * std::max(plus, minus);
}

Eigen::Vector3d bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error(Errc::DimensionMismatch, "Bloch vector needs a qubit state");
  return {expectation(rho, pauli_x()).real(), expectation(rho, pauli_y()).real(),
          expectation(rho, pauli_z()).real()};
}

PauliBound pauli_bound(const DensityMatrix& rho, const Eigen::Vector3d& a,
                       const Eigen::Vector3d& b) {
  const ComplexMatrix u = pauli_unitary(a);
  const ComplexMatrix v = pauli_unitary(b);
  const double du = variance(rho, u);
  const double dv = variance(rho, v);
  const double ab = a.dot(b);
  const double cross = a.cross(b).dot(bloch_vector(rho));
  PauliBound out;
  out.state_indep = 1.0 + ab * ab - 2.0 * std::abs(ab) * std::sqrt((1.0 - du) * (1.0 - dv));
  out.state_dep = out.state_indep + cross * cross;
  return out;
}

double gamma_bound(const DensityMatrix& rho, const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                   const std::vector<ComplexMatrix>& gammas) {
  if (std::abs(a.norm() - 1.0) > 1e-12 || std::abs(b.norm() - 1.0) > 1e-12)
    throw Error(Errc::NotUnitVector, "gamma_bound directions must be unit vectors");
  const double da = variance(rho, gamma_combination(a, gammas));
  const double db = variance(rho, gamma_combination(b, gammas));
  const double ab = a.dot(b);
  return 1.0 + ab * ab - 2.0 * std::abs(ab) * std::sqrt((1.0 - da) * (1.0 - db));
}

SaturatingVector saturating_vector(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                   double delta_a2, SaturatingBranch branch,
                                   SaturatingReading reading) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "direction lengths differ");
  if (std::abs(a.norm() - 1.0) > 1e-12 || std::abs(b.norm() - 1.0) > 1e-12)
    throw Error(Errc::NotUnitVector, "saturating state directions must be unit vectors");
  if (!(delta_a2 >= 0.0 && delta_a2 <= 1.0))
    throw Error(Errc::BadDimension, "target variance must lie in [0, 1]");
  const double ab = a.dot(b);
  if (std::abs(ab) >= 1.0 - 1e-12)
    throw Error(Errc::ParallelDirections, "a and b are (anti)parallel");
  const double delta = std::sqrt(delta_a2);
  const double perp_norm2 = 1.0 - ab * ab;
  const double coeff = reading == SaturatingReading::UnitRoot ? delta / std::sqrt(perp_norm2)
                                                              : delta / perp_norm2;
  const double sgn = branch == SaturatingBranch::Plus ? 1.0 : -1.0;
  const Eigen::VectorXd g =
      std::sqrt(1.0 - delta_a2) * a + sgn * saturating_tau(ab) * coeff * (b - ab * a);
  SaturatingVector out;
  out.raw_norm = g.norm();
  out.g = g / out.raw_norm;
  out.reading = reading;
  return out;
}

DensityMatrix gamma_saturating_state(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                     double delta_a2, const std::vector<ComplexMatrix>& gammas,
                                     SaturatingBranch branch, SaturatingReading reading) {
  const SaturatingVector sv = saturating_vector(a, b, delta_a2, branch, reading);
  const ComplexMatrix g_gamma = gamma_combination(sv.g, gammas);
  const auto d = g_gamma.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return DensityMatrix((id + g_gamma) / static_cast<double>(d));
}

DensityMatrix pauli_saturating_state(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                     double delta_a2, SaturatingBranch branch) {
  const SaturatingVector sv = saturating_vector(a, b, delta_a2, branch);
  const Eigen::Vector3d g = sv.g;
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return DensityMatrix(0.5 * (id + pauli_unitary(g)));
}

double ms_relation_check(double delta_u2, double delta_v2, double phase) {
  const double phi = std::abs(phase);
  if (phi >= kPi - 1e-12) return delta_u2 + delta_v2 - 1.0;
  const double a = std::tan(0.5 * phi);
  return (1.0 + 2.0 * a) * delta_u2 * delta_v2 + a * a * (delta_u2 + delta_v2) - a * a;
}

double ms_sum_bound(double phase) {
  const double phi = std::abs(phase);
  if (phi >= kPi - 1e-12) return 1.0;
  const double a = std::tan(0.5 * phi);
  // discriminant 4A^4 + 4A^2(1 + 2A) = (2A(A + 1))^2, so the positive root is A / (1 + 2A)
  const double root = a / (1.0 + 2.0 * a);
  return 2.0 * root;
}

std::string strategy_name(const Ur2Strategy& strategy) {
  struct Visitor {
    std::string operator()(const Ur2Optimal&) const { return "optimal"; }
    std::string operator()(const Ur2Sampled& s) const {
      return "sampled(" + std::to_string(s.count) + "," + std::to_string(s.seed) + ")";
    }
    std::string operator()(const Ur2Explicit& e) const {
      return std::string("explicit(") + (e.sign > 0 ? "+" : "-") + ")";
    }
  };
  return std::visit(Visitor{}, strategy);
}

std::vector<std::pair<std::string, double>> BoundReport::slacks() const {
  std::vector<std::pair<std::string, double>> out;
  out.emplace_back("ur1", sum - ur1);
  if (ur1_weak_cos) out.emplace_back("ur1_weak_cos", sum - *ur1_weak_cos);
  out.emplace_back("ur1_weak_mod", sum - ur1_weak_mod);
  if (ur1_phase_form) out.emplace_back("ur1_phase_form", sum - *ur1_phase_form);
  out.emplace_back("ur2", sum - ur2);
  out.emplace_back("ur3", sum - ur3);
  if (ms_sum) out.emplace_back("ms_sum", sum - *ms_sum);
  if (ms_residual) out.emplace_back("ms_relation", *ms_residual);
  return out;
}

double BoundReport::min_slack() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& [name, slack] : slacks()) m = std::min(m, slack);
  return m;
}

BoundReport evaluate_all(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v,
                         const EvalConfig& config) {
  BoundReport r;
  r.d = psi.dim();
  r.delta_u2 = variance(psi, u);
  r.delta_v2 = variance(psi, v);
  r.sum = r.delta_u2 + r.delta_v2;
  r.ur1 = ur1(psi, u, v);
  try {
    r.ur1_weak_cos = ur1_weak_cos(psi, u, v);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateDenominator) throw;
  }
  r.ur1_weak_mod = ur1_weak_mod(psi, u, v);
  try {
    r.ur1_phase_form = ur1_phase_form(psi, u, v);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateDenominator) throw;
  }

  r.ur2_strategy = strategy_name(config.ur2);
  if (const auto* ex = std::get_if<Ur2Explicit>(&config.ur2)) {
    r.ur2 = ur2(psi, u, v, ex->perp, ex->sign);
  } else if (const auto* sm = std::get_if<Ur2Sampled>(&config.ur2)) {
    r.ur2 = psi.dim() >= 2 ? ur2_sampled(psi, u, v, sm->count, sm->seed).value
                           : ur2_floor(psi, u, v);
  } else {
    r.ur2 = ur2_best(psi, u, v).value;
  }
  r.ur3 = ur3(psi, u, v);

  try {
    const double phase = commutation_phase(u, v);
    r.ms_sum = ms_sum_bound(phase);
    r.ms_residual = ms_relation_check(r.delta_u2, r.delta_v2, phase);
  } catch (const Error& e) {
    if (e.code() != Errc::NotWeylPair) throw;
  }

  const BargmannTriple b3 = bargmann3(psi, u, v);
  if (!b3.phase_undefined) r.cos_phi3 = b3.cos_phase();

  if (config.check_slack) {
    for (const auto& [name, slack] : r.slacks())
      if (slack < -kBoundSlackTol)
        throw Error(Errc::BoundViolated, name + " exceeds the variance sum by " +
                                             std::to_string(-slack));
  }
  return r;
}

}  // namespace urbound
