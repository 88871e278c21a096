#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "urbound/linalg.hpp"
#include "urbound/operators.hpp"

namespace urbound {

struct HarperGround {
  PureState psi;
  double delta_u2 = 0.0;
  double delta_v2 = 0.0;
  double energy = 0.0;
  double spectral_gap = 0.0;  // E_1 - E_0
};

/// Lowest eigenvector of harper(pair) from eig_hermitian.
HarperGround harper_ground(const WeylPair& pair);

/// ||L psi - psi|| where
/// L = (1/2)[(1 - (<U>U^dag + <U^dag>U)/2) / dU^2 + (1 - (<V>V^dag + <V^dag>V)/2) / dV^2].
/// Throws DegenerateVariance if either variance is <= 1e-10.
double critical_residual(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);

struct Realignment {
  PureState psi;
  long long a = 0;
  long long b = 0;
  bool aligned = true;  // false: no translation made both expectations real to 1e-6
};

/// Exhaustive search over psi' = U^a V^{-b} psi, (a, b) in Z_d x Z_d, for real
/// <U>, <V> (|Im<U>| + |Im<V>| <= 1e-6) maximizing Re<U> + Re<V>. Without an
/// aligned candidate the one with the smallest imaginary parts is returned.
Realignment realign_phases(const PureState& psi, const WeylPair& pair);

/// atan2(C2, C1), C1 = dV^2 sqrt(1 - dU^2), C2 = dU^2 sqrt(1 - dV^2).
double squeezing_theta(double delta_u2, double delta_v2);

struct TiltedStationarity {
  double theta = 0.0;
  double printed_residual = 0.0;  // eigenvalue cos(theta)|<V~>| + sin(theta)|<U~>|
  double swapped_residual = 0.0;  // eigenvalue cos(theta)|<U~>| + sin(theta)|<V~>|
  double exact_residual = 0.0;    // eigenvalue (dU^2 + dV^2 - 2 dU^2 dV^2) / sqrt(C1^2 + C2^2)
};

/// Residuals of [cos(theta) C_{U~} + sin(theta) C_{V~}] psi = lambda psi with
/// U~ = e^{-i phi_U} U, V~ = e^{-i phi_V} V taken from the phases of <U>, <V>.
TiltedStationarity tilted_stationarity_check(const PureState& psi, const WeylPair& pair);

struct MusRecord {
  std::size_t d = 0;
  double delta_u2 = 0.0;
  double delta_v2 = 0.0;
  double ur1_half = 0.0;
  double ur2_half = 0.0;  // optimal perp
  double ur3_half = 0.0;
  double ground_energy = 0.0;
  double residual = 0.0;
  long long realign_a = 0;
  long long realign_b = 0;
  bool aligned = true;
  double spectral_gap = 0.0;

  // alternative readings of the bound columns
  double ur1_weak_half = 0.0;      // |cos Phi3| weak form
  double ur2_sampled_half = 0.0;   // max over 20 seeded random perps
  double ur2_floor_half = 0.0;     // perp term dropped
};

inline constexpr std::uint64_t kMusTableSeed = 2024;

MusRecord mus_record(std::size_t d, std::uint64_t seed = kMusTableSeed);

/// One record per d in [d_min, d_max] on the clock/shift pair, in order of d.
std::vector<MusRecord> mus_table(std::size_t d_min, std::size_t d_max,
                                 std::uint64_t seed = kMusTableSeed);

}  // namespace urbound
