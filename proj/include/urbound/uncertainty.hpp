#pragma once

#include "urbound/linalg.hpp"

namespace urbound {

/// <psi|A|psi>
Complex expectation(const PureState& psi, const ComplexMatrix& a);
/// Tr(rho A)
Complex expectation(const DensityMatrix& rho, const ComplexMatrix& a);

/// 1 - |<U>|^2, clamped to [0, 1] within 1e-12 of slack.
double variance(const PureState& psi, const ComplexMatrix& u);
double variance(const DensityMatrix& rho, const ComplexMatrix& u);

/// Interference visibility |<psi|U|psi>|; visibility^2 + variance = 1.
double visibility(const PureState& psi, const ComplexMatrix& u);
double visibility(const DensityMatrix& rho, const ComplexMatrix& u);

/// S^2 = 4 (1 - |<psi1|psi2>|^2).
double fubini_study(const PureState& psi1, const PureState& psi2);

/// Cov(U, V) = <U^dagger V> - <U^dagger><V>.
Complex covariance(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);
Complex covariance(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v);

/// Three-point Bargmann invariant <psi|psi_U><psi_U|psi_V><psi_V|psi>.
struct BargmannTriple {
  Complex value;
  double modulus = 0.0;
  double phase = 0.0;            // Arg of value; 0 when undefined
  bool phase_undefined = false;  // modulus <= 1e-14

  /// cos(phase) * modulus with the undefined case contributing zero.
  double real_part() const noexcept { return phase_undefined ? 0.0 : value.real(); }
  /// cos(phase), or 0 when the phase is undefined.
  double cos_phase() const noexcept;
};

BargmannTriple bargmann3(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);

/// Generalized variance <A A^dagger> - |<A>|^2 for arbitrary A (clamped at 0
/// within 1e-12).
double gvariance(const PureState& psi, const ComplexMatrix& a);
double gvariance(const DensityMatrix& rho, const ComplexMatrix& a);

/// A|psi> = mean |psi> + dev |perp> with perp orthogonal to psi.
struct VaidmanDecomposition {
  Complex mean;
  double dev = 0.0;  // ||(I - |psi><psi|) A psi||, the A^dagger A ordering
  PureState perp;
};

/// Throws DegenerateDecomposition when the orthogonal component has norm <= 1e-12.
VaidmanDecomposition vaidman_perp(const PureState& psi, const ComplexMatrix& a);

/// ||(I - |psi><psi|) A psi||^2; zero-safe counterpart of vaidman_perp().dev^2.
double orthogonal_weight(const PureState& psi, const ComplexMatrix& a);

}  // namespace urbound
