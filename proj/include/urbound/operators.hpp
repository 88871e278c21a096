#pragma once

#include <cstddef>
#include <vector>

#include "urbound/linalg.hpp"

namespace urbound {

// Index convention shared by every constructor here: the symmetric labels
// j = -floor(d/2) ... floor((d-1)/2) occupy storage slots 0 ... d-1 in
// increasing order, so slot(j) = j + floor(d/2).

int index_min(std::size_t d) noexcept;
int index_max(std::size_t d) noexcept;
/// Storage slot of label j (taken mod d into the symmetric range).
std::size_t slot_of(long long j, std::size_t d);
/// Symmetric label of a storage slot.
int label_of(std::size_t slot, std::size_t d);

/// Unitary pair with U V = e^{i phase} V U.
class WeylPair {
 public:
  /// Validates unitarity and extracts the commutation phase; throws
  /// NotUnitary / NotWeylPair.
  WeylPair(ComplexMatrix u, ComplexMatrix v);

  const ComplexMatrix& u() const noexcept { return u_; }
  const ComplexMatrix& v() const noexcept { return v_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(u_.rows()); }
  double phase() const noexcept { return phase_; }

 private:
  ComplexMatrix u_;
  ComplexMatrix v_;
  double phase_;
};

/// diag(e^{i 2 pi j / d}).
ComplexMatrix clock(std::size_t d);
/// V|j> = |j+1> (cyclic); clock * shift = e^{2 pi i/d} shift * clock.
ComplexMatrix shift(std::size_t d);
/// F_{jk} = e^{-i 2 pi j k / d} / sqrt(d) on symmetric labels. The sign is
/// chosen so that F * clock * F^dagger == shift exactly.
ComplexMatrix dft(std::size_t d);
WeylPair clock_shift_pair(std::size_t d);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// a . sigma for a real unit 3-vector (NotUnitVector otherwise).
ComplexMatrix pauli_unitary(const Eigen::Vector3d& a);

/// 2n pairwise anticommuting Hermitian unitaries of size 2^n built as a
/// Jordan-Wigner ladder: Gamma_{2k-1} = Z^{(k-1)} X I^{(n-k)},
/// Gamma_{2k} = Z^{(k-1)} Y I^{(n-k)}. Requires 1 <= n <= 5 (BadRank).
std::vector<ComplexMatrix> gamma_generators(int n);

/// sum_i c_i Gamma_i.
ComplexMatrix gamma_combination(const Eigen::VectorXd& coeffs,
                                 const std::vector<ComplexMatrix>& gammas);

/// U^m V^{-n}.
ComplexMatrix translation(const WeylPair& pair, long long m, long long n);

/// (U + U^dagger) / 2
ComplexMatrix cosine_part(const ComplexMatrix& u);
/// -(U + U^dagger)/2 - (V + V^dagger)/2
ComplexMatrix harper(const WeylPair& pair);
/// -cos(theta) C_{U~} - sin(theta) C_{V~} with U~ = e^{-i phi_u} U, V~ = e^{-i phi_v} V.
ComplexMatrix tilted_harper(const WeylPair& pair, double theta, double phi_u, double phi_v);

/// Phi in (-pi, pi] with ||UV - e^{i Phi} VU||_F <= 1e-8 d, read off the
/// largest-modulus entry ratio of UV against VU. Throws NotWeylPair.
double commutation_phase(const ComplexMatrix& u, const ComplexMatrix& v);

}  // namespace urbound
