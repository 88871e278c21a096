#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "urbound/linalg.hpp"
#include "urbound/uncertainty.hpp"

namespace urbound {

inline constexpr double kBoundSlackTol = 1e-10;

// --- sum-of-variance lower bounds for a pair of unitaries -------------------

/// 1 + |<psi_U|psi_V>|^2 - 2 cos(Phi3) sqrt((1-dU^2)(1-dV^2)) |<U^dagger V>|,
/// with an undefined Bargmann phase contributing no cross term.
double ur1(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);
/// Mixed-state form 1 + |<U^dag V>|^2 - <U^dag V><U><V^dag> - <V^dag U><V><U^dag>.
double ur1(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v);

/// 1 + (x^2 - x|cos Phi3|) / (1 - x|cos Phi3|) with x = |<psi_U|psi_V>|.
/// Throws DegenerateDenominator when the denominator is <= 1e-12.
double ur1_weak_cos(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);

/// 1 - |<U^dagger V>|.
double ur1_weak_mod(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);
double ur1_weak_mod(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v);

/// 2 - D / (1 - sqrt(1 - D) |cos Phi3|), D = variance(psi, U^dagger V).
/// nullopt (not applicable) when cos Phi3 < 0; DegenerateDenominator as above.
/// Algebraically this is the same function of (x, |cos Phi3|) as ur1_weak_cos.
std::optional<double> ur1_phase_form(const PureState& psi, const ComplexMatrix& u,
                                     const ComplexMatrix& v);

/// |<psi|U^dag + s i V^dag|perp>|^2 - s 2 Im Cov(U,V) for s = +1 / -1.
/// Throws NotOrthogonal if |<psi|perp>| > 1e-10.
double ur2(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v,
           const PureState& perp, int sign);

struct Ur2Result {
  double value = 0.0;
  int sign = +1;
  std::optional<PureState> perp;  // empty when the matrix element vanishes for the chosen sign
  bool degenerate_perp = false;   // both projections vanished
};

/// Maximizes ur2 over perp and sign. The maximizer for sign s is the
/// normalized (I - |psi><psi|)(U - s i V)|psi>.
Ur2Result ur2_best(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);

/// Max of ur2 over `count` seeded random perps and both signs.
Ur2Result ur2_sampled(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v,
                      int count, std::uint64_t seed);

/// Value of ur2 with a vanishing matrix element: max over s of -s 2 Im Cov.
double ur2_floor(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);

/// (1/2) max over A in {U+V, U-V} of ||(I - |psi><psi|) A psi||^2.
double ur3(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);

// --- Pauli and anticommuting observables -------------------------------------

struct PauliBound {
  double state_dep = 0.0;
  double state_indep = 0.0;
};

/// Qubit bounds for U = a.sigma, V = b.sigma.
PauliBound pauli_bound(const DensityMatrix& rho, const Eigen::Vector3d& a, const Eigen::Vector3d& b);

/// Bloch vector r with rho = (I + r.sigma)/2.
Eigen::Vector3d bloch_vector(const DensityMatrix& rho);

/// 1 + (a.b)^2 - 2|a.b| sqrt((1 - dGa^2)(1 - dGb^2)), Gamma_a = a.Gamma.
double gamma_bound(const DensityMatrix& rho, const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                   const std::vector<ComplexMatrix>& gammas);

enum class SaturatingBranch { Plus, Minus };
enum class SaturatingReading {
  UnitRoot,  // second coefficient dGa / sqrt(1 - (a.b)^2): g is a unit vector as built
  Printed,   // second coefficient dGa / (1 - (a.b)^2), then normalized
};

struct SaturatingVector {
  Eigen::VectorXd g;        // unit length
  double raw_norm = 1.0;    // length before normalization
  SaturatingReading reading = SaturatingReading::UnitRoot;
};

/// g = sqrt(1 - dGa^2) a +/- tau c (b - (a.b) a), tau = sgn(a.b) with sgn(0) = +1.
/// Throws ParallelDirections when |a.b| >= 1 - 1e-12.
SaturatingVector saturating_vector(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                   double delta_a2,
                                   SaturatingBranch branch = SaturatingBranch::Plus,
                                   SaturatingReading reading = SaturatingReading::UnitRoot);

/// rho = (I + g.Gamma) / d built from saturating_vector.
DensityMatrix gamma_saturating_state(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                     double delta_a2, const std::vector<ComplexMatrix>& gammas,
                                     SaturatingBranch branch = SaturatingBranch::Plus,
                                     SaturatingReading reading = SaturatingReading::UnitRoot);

/// rho = (I + g.sigma) / 2 for three-dimensional a, b.
DensityMatrix pauli_saturating_state(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                     double delta_a2,
                                     SaturatingBranch branch = SaturatingBranch::Plus);

// --- Weyl-pair relation -------------------------------------------------------

/// (1 + 2A) dU dV + A^2 (dU + dV) - A^2 with A = tan(|phi|/2); for |phi| = pi
/// the relation divided by A^2, i.e. dU + dV - 1.
double ms_relation_check(double delta_u2, double delta_v2, double phase);

/// Smallest dU + dV permitted by the relation: 2x* where x* is the positive
/// root of (1 + 2A) x^2 + 2A^2 x - A^2 = 0 (1 at phi = pi).
double ms_sum_bound(double phase);

// --- aggregate report ---------------------------------------------------------

struct Ur2Explicit {
  PureState perp;
  int sign = +1;
};
struct Ur2Sampled {
  int count = 20;
  std::uint64_t seed = 0;
};
struct Ur2Optimal {};
using Ur2Strategy = std::variant<Ur2Optimal, Ur2Sampled, Ur2Explicit>;

std::string strategy_name(const Ur2Strategy& strategy);

struct EvalConfig {
  Ur2Strategy ur2 = Ur2Optimal{};
  bool check_slack = true;  // throw BoundViolated if any slack < -1e-10
};

struct BoundReport {
  std::size_t d = 0;
  double delta_u2 = 0.0;
  double delta_v2 = 0.0;
  double sum = 0.0;
  double ur1 = 0.0;
  std::optional<double> ur1_weak_cos;    // empty when the denominator guard fires
  double ur1_weak_mod = 0.0;
  std::optional<double> ur1_phase_form;  // empty when cos Phi3 < 0 or guarded
  double ur2 = 0.0;
  std::string ur2_strategy;
  double ur3 = 0.0;
  std::optional<double> ms_sum;          // empty for pairs without a single commutation phase
  std::optional<double> ms_residual;
  std::optional<double> cos_phi3;        // empty when the Bargmann phase is undefined

  /// (name, sum - bound) for every populated bound, plus the relation residual.
  std::vector<std::pair<std::string, double>> slacks() const;
  double min_slack() const;
};

BoundReport evaluate_all(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v,
                         const EvalConfig& config = {});

}  // namespace urbound
