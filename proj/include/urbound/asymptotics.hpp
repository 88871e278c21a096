#pragma once

#include <cstddef>
#include <string>

#include "urbound/linalg.hpp"
#include "urbound/operators.hpp"

namespace urbound {

/// Eigenphases of a unitary with an orthonormal eigenbasis. Phases lie in
/// [-pi, pi); degenerate eigenvalues of (U + U^dag)/2 are split by
/// diagonalizing (U - U^dag)/2i inside each cluster.
struct UnitaryEigen {
  RealVector phases;
  ComplexMatrix vectors;
};

UnitaryEigen unitary_eig(const ComplexMatrix& u);

/// Hermitian u with U = exp(i sqrt(2 pi/d) u). Throws NotUnitary.
ComplexMatrix generator(const ComplexMatrix& u);

/// exp(i sqrt(2 pi/d) h) for Hermitian h.
ComplexMatrix unitary_from_generator(const ComplexMatrix& h);

enum class MembershipBasis { Computational, Fourier };

/// Largest |j| admitted by the window |j| <= (2/pi) floor(d/2) delta.
double pdelta_window(std::size_t d, double delta);

/// Projector onto the window labels in the computational basis, or onto
/// F|j> for the same labels in the Fourier basis.
ComplexMatrix pdelta_projector(std::size_t d, double delta, MembershipBasis basis);

struct MembershipReport {
  std::size_t d = 0;
  double delta = 0.0;
  double epsilon = 0.0;
  double p_delta_expectation = 0.0;
  bool member = false;  // p_delta_expectation > 1 - epsilon
  double variance_bound = 0.0;  // delta^2 / 2 + 2 epsilon
  double measured_epsilon = 0.0;  // 1 - p_delta_expectation
};

MembershipReport pdelta_membership(const PureState& psi, double delta, double epsilon,
                                   MembershipBasis basis = MembershipBasis::Computational);

struct Lemma1Result {
  bool holds = true;
  bool vacuous = false;  // psi is not a member; nothing to check
  double margin = 0.0;   // delta^2/2 + 2 epsilon - dU^2
  double delta_u2 = 0.0;
};

/// Membership is taken with respect to the spectral projector of U onto
/// eigenphases whose label phase d / (2 pi) lies in the window.
Lemma1Result lemma1_check(const PureState& psi, double delta, double epsilon,
                          const ComplexMatrix& u);

struct CenterTranslation {
  long long k = 0;
  PureState psi;
  double measured_epsilon = 0.0;
  double epsilon_bound = 0.0;  // (dU^2 + pi^2/d^2) / sin^2(delta/2)
  bool centered = true;        // measured_epsilon < epsilon_bound
};

/// Searches k in Z_d for V^k psi with the smallest 1 - <P_delta> in the
/// computational basis; ties keep the smallest k.
CenterTranslation center_translation(const PureState& psi, double delta, const WeylPair& pair);

struct HermitianBound {
  double lhs = 0.0;  // du^2 + dv^2
  double rhs = 0.0;  // s i<[u,v]> + ||(I - |psi><psi|)(u - s i v) psi||^2
  double parallelogram_rhs = 0.0;  // (1/2) variance of u + v
  double slack() const noexcept { return lhs - rhs; }
  double parallelogram_slack() const noexcept { return lhs - parallelogram_rhs; }
};

/// Hermitian sum relation with the optimal perpendicular state.
HermitianBound hermitian_mp_bound(const PureState& psi, const ComplexMatrix& u,
                                  const ComplexMatrix& v, int sign);

/// Variance <h^2> - <h>^2 of a Hermitian operator.
double hermitian_variance(const PureState& psi, const ComplexMatrix& h);

/// ||(1/2)[(u - <u>)^2 / du^2 + (v - <v>)^2 / dv^2] psi - psi||.
/// Throws DegenerateVariance if either variance is <= 1e-10.
double mus_limit_residual(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);

/// |<U^dag V> - (1 + i a(<v> - <u>) + (a^2/2)(2<uv> - <u^2> - <v^2>))|, a = sqrt(2 pi/d).
double series_residual(const PureState& psi, const ComplexMatrix& big_u,
                       const ComplexMatrix& big_v, const ComplexMatrix& u,
                       const ComplexMatrix& v);

enum class AsymptoticFamily { HarperGround, ThetaSweep };

std::string family_name(AsymptoticFamily family);

struct AsymptoticRecord {
  std::size_t d = 0;
  AsymptoticFamily family = AsymptoticFamily::HarperGround;
  double theta = 0.0;
  double sum = 0.0;         // dU^2 + dV^2
  double scaled = 0.0;      // (2 pi/d)(du^2 + dv^2)
  double ur1 = 0.0;
  double gap_hermitian = 0.0;  // |sum - scaled| / sum
  double gap_ur1 = 0.0;        // (sum - ur1) / sum
  double limit_residual = 0.0;
  double series_residual = 0.0;
  double hermitian_slack = 0.0;  // min over both signs
  double delta_uh2 = 0.0;
  double delta_vh2 = 0.0;
};

/// Clock/shift pair at dimension d. ThetaSweep uses cos(theta)|0> - sin(theta)|-1>.
AsymptoticRecord asymptotic_gap(std::size_t d, AsymptoticFamily family,
                                double theta = kPi / 8.0);

}  // namespace urbound
