#include "urbound/random.hpp"

#include <cmath>
#include <random>

namespace urbound {

namespace {

ComplexVector gaussian_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

PureState haar_random_state(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw Error(Errc::BadDimension, "haar_random_state requires d >= 1");
  std::mt19937_64 rng(seed);
  for (;;) {
    ComplexVector v = gaussian_vector(dim, rng);
    const double n = v.norm();
    if (n > 1e-150) return PureState::normalized(v / n);
  }
}

PureState random_perp(const PureState& psi, std::uint64_t seed) {
  if (psi.dim() < 2) throw Error(Errc::DimensionTooSmall, "random_perp requires d >= 2");
  std::mt19937_64 rng(seed);
  const ComplexVector& p = psi.amplitudes();
  for (;;) {
    ComplexVector v = gaussian_vector(psi.dim(), rng);
    v /= v.norm();
    // two Gram-Schmidt passes keep |<psi|phi>| at round-off level
    for (int pass = 0; pass < 2; ++pass) v -= p * p.dot(v);
    const double residual = v.norm();
    if (residual > 1e-6) {
      v /= residual;
      v -= p * p.dot(v);
      return PureState::normalized(v);
    }
  }
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0) throw Error(Errc::BadDimension, "random_density requires d >= 1");
  if (rank < 1 || rank > dim) throw Error(Errc::BadRank, "random_density requires 1 <= r <= d");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(rank);
  double total = 0.0;
  for (auto& w : weights) {
    w = expo(rng);
    total += w;
  }
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < rank; ++i) {
    ComplexVector v = gaussian_vector(dim, rng);
    v /= v.norm();
    rho += (weights[i] / total) * (v * v.adjoint());
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw Error(Errc::BadDimension, "haar_random_unitary requires d >= 1");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j) z.col(j) = gaussian_vector(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Eigen::VectorXd random_unit_vector(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::BadDimension, "random_unit_vector requires n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normal(rng);
    const double norm = v.norm();
    if (norm > 1e-12) return v / norm;
  }
}

}  // namespace urbound
