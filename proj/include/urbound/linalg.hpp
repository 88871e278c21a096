#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "urbound/error.hpp"

namespace urbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// ||M^dagger M - I||_F <= tol * d
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);
/// ||M - M^dagger||_F <= tol * d
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);
bool all_finite(const ComplexMatrix& m);

/// Throws BadDimension for non-square or empty matrices and NonFinite for NaN/Inf entries.
void require_square(const ComplexMatrix& m, const char* what);

/// Unit-norm complex d-vector. The invariant |‖ψ‖ - 1| <= 1e-12 is checked at
/// construction; use `normalized` to build one from an arbitrary nonzero vector.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  static PureState normalized(const ComplexVector& v);
  static PureState basis(std::size_t dim, std::size_t slot);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  /// <this|other>
  Complex inner(const PureState& other) const;
  /// |this><this|
  ComplexMatrix projector() const;

 private:
  ComplexVector amps_;
};

/// Positive semidefinite, unit-trace Hermitian matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), eigenvalues >= -1e-12 and |Tr - 1| <= 1e-12.
  explicit DensityMatrix(ComplexMatrix rho);

  static DensityMatrix from_pure(const PureState& psi);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return rho_; }
  double purity() const;

 private:
  struct Trusted {};
  DensityMatrix(ComplexMatrix rho, Trusted) : rho_(std::move(rho)) {}

  ComplexMatrix rho_;
};

struct EigenDecomposition {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // column k pairs with eigenvalues(k)

  std::size_t dim() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
  PureState vector(std::size_t k) const;
};

struct JacobiOptions {
  int max_sweeps = 100;
  /// Converged once the off-diagonal Frobenius norm drops below tol * ||H||_F.
  double off_diagonal_tol = 1e-12;
  double hermitian_tol = 1e-10;
};

/// Dense Hermitian eigensolver (cyclic complex Jacobi, row-major sweep order).
///
/// Eigenvalues come back ascending; equal eigenvalues keep the order in which
/// they appear on the converged diagonal. Each eigenvector is phase-normalized
/// so that its first component with modulus > 1e-8 is real and positive, which
/// makes the output bit-identical for identical input.
///
/// Throws NotHermitian if ||H - H^dagger||_F > hermitian_tol * d, and
/// NoConvergence if the sweep budget is exhausted.
EigenDecomposition eig_hermitian(const ComplexMatrix& h, const JacobiOptions& opts = {});

/// Integer matrix power; negative exponents use the adjoint (valid for unitaries).
ComplexMatrix unitary_power(const ComplexMatrix& u, long long exponent);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace urbound
