#include "urbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace urbound {

namespace {

constexpr double kPhaseAnchorTol = 1e-8;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index q = 1; q < n; ++q)
    for (Eigen::Index p = 0; p < q; ++p) sum += 2.0 * std::norm(a(p, q));
  return std::sqrt(sum);
}

// Rotate so that the first component with modulus above the anchor tolerance
// is real and positive.
void normalize_phase(Eigen::Ref<ComplexVector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > kPhaseAnchorTol) {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(mag, 0.0);
      return;
    }
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw Error(Errc::BadDimension, std::string(what) + " must be a non-empty square matrix");
  if (!all_finite(m)) throw Error(Errc::NonFinite, std::string(what) + " has NaN/Inf entries");
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) return false;
  const auto d = static_cast<double>(m.rows());
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).norm() <= tol * d;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) return false;
  const auto d = static_cast<double>(m.rows());
  return (m - m.adjoint()).norm() <= tol * d;
}

// ---------------------------------------------------------------------------
// PureState / DensityMatrix

PureState::PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw Error(Errc::BadDimension, "state dimension must be >= 1");
  for (Eigen::Index i = 0; i < amps_.size(); ++i)
    if (!std::isfinite(amps_(i).real()) || !std::isfinite(amps_(i).imag()))
      throw Error(Errc::NonFinite, "state has NaN/Inf amplitudes");
  if (std::abs(amps_.norm() - 1.0) > 1e-12)
    throw Error(Errc::NotNormalized, "state norm deviates from 1 by more than 1e-12");
}

PureState PureState::normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw Error(Errc::NotNormalized, "cannot normalize a zero or non-finite vector");
  return PureState(v / n);
}

PureState PureState::basis(std::size_t dim, std::size_t slot) {
  if (dim == 0 || slot >= dim) throw Error(Errc::BadDimension, "basis slot out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(slot)) = 1.0;
  return PureState(std::move(v));
}

Complex PureState::inner(const PureState& other) const {
  if (other.dim() != dim()) throw Error(Errc::DimensionMismatch, "inner product of states");
  return amps_.dot(other.amps_);  // Eigen's dot conjugates the left operand
}

ComplexMatrix PureState::projector() const { return amps_ * amps_.adjoint(); }

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  require_square(rho_, "density matrix");
  if ((rho_ - rho_.adjoint()).norm() > 1e-12 * static_cast<double>(rho_.rows()))
    throw Error(Errc::NotDensityMatrix, "density matrix is not Hermitian to 1e-12");
  if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > 1e-12)
    throw Error(Errc::NotDensityMatrix, "density matrix trace deviates from 1");
  rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
  const auto eig = eig_hermitian(rho_);
  if (eig.eigenvalues(0) < -1e-12)
    throw Error(Errc::NotDensityMatrix, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector(), Trusted{});
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

PureState EigenDecomposition::vector(std::size_t k) const {
  return PureState::normalized(eigenvectors.col(static_cast<Eigen::Index>(k)));
}

// ---------------------------------------------------------------------------
// Jacobi

EigenDecomposition eig_hermitian(const ComplexMatrix& h, const JacobiOptions& opts) {
  require_square(h, "eig_hermitian input");
  const Eigen::Index n = h.rows();
  if ((h - h.adjoint()).norm() > opts.hermitian_tol * static_cast<double>(n))
    throw Error(Errc::NotHermitian, "eig_hermitian input is not Hermitian");

  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix x = ComplexMatrix::Identity(n, n);
  const double scale = a.norm();
  const double target = opts.off_diagonal_tol * (scale > 0.0 ? scale : 1.0);

  bool converged = off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Real Jacobi rotation on the phase-stripped 2x2 block.
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex s_fwd = s * phase;            // J(p,q)
        const Complex s_bwd = s * std::conj(phase); // -J(q,p)

        // A <- A J
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s_bwd * akq;
          a(k, q) = s_fwd * akp + c * akq;
        }
        // A <- J^dagger A
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s_fwd * aqk;
          a(q, k) = s_bwd * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // X <- X J
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex xkp = x(k, p);
          const Complex xkq = x(k, q);
          x(k, p) = c * xkp - s_bwd * xkq;
          x(k, q) = s_fwd * xkp + c * xkq;
        }
      }
    }
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged)
    throw Error(Errc::NoConvergence,
                "Jacobi sweep budget of " + std::to_string(opts.max_sweeps) + " exhausted");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    ComplexVector col = x.col(src);
    col /= col.norm();
    normalize_phase(col);
    out.eigenvectors.col(k) = col;
  }
  return out;
}

ComplexMatrix unitary_power(const ComplexMatrix& u, long long exponent) {
  require_square(u, "unitary_power base");
  ComplexMatrix base = exponent < 0 ? ComplexMatrix(u.adjoint()) : u;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1ULL
                                      : static_cast<unsigned long long>(exponent);
  ComplexMatrix result = ComplexMatrix::Identity(u.rows(), u.cols());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1ULL;
    if (e > 0) base = base * base;
  }
  return result;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace urbound
