#include <doctest.h>

#include <cmath>

#include "urbound/linalg.hpp"
#include "urbound/operators.hpp"
#include "urbound/random.hpp"
#include "urbound/uncertainty.hpp"

using namespace urbound;

namespace {

ComplexMatrix random_hermitian(std::size_t d, std::uint64_t seed) {
  const ComplexMatrix g = haar_random_unitary(d, seed);
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = static_cast<double>(i % 5) - 2.0;
  h = g * h * g.adjoint();
  ComplexVector x = haar_random_state(d * d, seed + 1).amplitudes();
  h += Eigen::Map<ComplexMatrix>(x.data(), n, n);
  return 0.5 * (h + h.adjoint());
}

}  // namespace

TEST_CASE("eig_hermitian: diagonal input is sorted with basis eigenvectors") {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 2.0;
  h(1, 1) = 1.0;
  const EigenDecomposition e = eig_hermitian(h);
  CHECK(e.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(std::abs(e.eigenvectors(1, 0) - Complex(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(e.eigenvectors(0, 1) - Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("eig_hermitian: -sigma_x - sigma_z has ground energy -sqrt(2)") {
  const ComplexMatrix h = -pauli_x() - pauli_z();
  const EigenDecomposition e = eig_hermitian(h);
  CHECK(std::abs(e.eigenvalues(0) + std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(e.eigenvalues(1) - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("eig_hermitian: Harper d=3 ground state variance") {
  const WeylPair p = clock_shift_pair(3);
  const EigenDecomposition e = eig_hermitian(harper(p));
  CHECK(std::abs(variance(e.vector(0), p.u()) - 0.533494) < 1e-6);
}

TEST_CASE("eig_hermitian: residual, orthonormality and agreement with Eigen") {
  for (std::size_t d : {2u, 3u, 5u, 8u, 17u, 32u, 64u}) {
    const ComplexMatrix h = random_hermitian(d, 100 + d);
    const EigenDecomposition e = eig_hermitian(h);
    const double hn = h.norm();
    for (Eigen::Index k = 0; k < e.eigenvalues.size(); ++k) {
      const ComplexVector r = h * e.eigenvectors.col(k) - e.eigenvalues(k) * e.eigenvectors.col(k);
      CHECK(r.norm() <= 1e-10 * hn);
      if (k > 0) CHECK(e.eigenvalues(k) >= e.eigenvalues(k - 1));
    }
    const auto n = static_cast<Eigen::Index>(d);
    CHECK((e.eigenvectors.adjoint() * e.eigenvectors - ComplexMatrix::Identity(n, n)).norm() <=
          1e-10 * static_cast<double>(d));
    const ComplexMatrix rebuilt =
        e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
    CHECK((rebuilt - h).norm() <= 1e-9 * hn);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(h);
    CHECK((oracle.eigenvalues() - e.eigenvalues).cwiseAbs().maxCoeff() <= 1e-10 * hn);
  }
}

TEST_CASE("eig_hermitian: identical input gives bit-identical output") {
  const ComplexMatrix h = random_hermitian(12, 5);
  const EigenDecomposition a = eig_hermitian(h);
  const EigenDecomposition b = eig_hermitian(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("eig_hermitian: eigenvector phase anchor is real positive") {
  const EigenDecomposition e = eig_hermitian(random_hermitian(6, 9));
  for (Eigen::Index k = 0; k < 6; ++k) {
    Eigen::Index i = 0;
    while (std::abs(e.eigenvectors(i, k)) <= 1e-8) ++i;
    CHECK(e.eigenvectors(i, k).imag() == 0.0);
    CHECK(e.eigenvectors(i, k).real() > 0.0);
  }
}

TEST_CASE("eig_hermitian: errors") {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(h), Error);
  try {
    eig_hermitian(h);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotHermitian);
  }
  JacobiOptions tight;
  tight.max_sweeps = 0;
  try {
    eig_hermitian(random_hermitian(4, 1), tight);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoConvergence);
  }
}

TEST_CASE("PureState and DensityMatrix validation") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(PureState{v}, Error);
  CHECK(std::abs(PureState::normalized(v).amplitudes().norm() - 1.0) < 1e-15);

  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  try {
    DensityMatrix{bad};
    FAIL("trace 2 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDensityMatrix);
  }
  ComplexMatrix neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, Error);
  CHECK(DensityMatrix::from_pure(PureState::basis(3, 1)).purity() == doctest::Approx(1.0));
}

TEST_CASE("haar_random_state: d=1, determinism, normalization, first moment") {
  const PureState one = haar_random_state(1, 42);
  CHECK(std::abs(std::abs(one[0]) - 1.0) < 1e-12);
  CHECK(haar_random_state(2, 9).amplitudes() == haar_random_state(2, 9).amplitudes());
  CHECK(haar_random_state(2, 9).amplitudes() != haar_random_state(2, 10).amplitudes());
  for (std::size_t d : {2u, 7u, 64u, 512u})
    CHECK(std::abs(haar_random_state(d, d).amplitudes().norm() - 1.0) <= 1e-12);

  double mean = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) mean += std::norm(haar_random_state(4, static_cast<std::uint64_t>(i))[0]);
  mean /= n;
  CHECK(std::abs(mean - 0.25) <= 0.01);
}

TEST_CASE("random_perp: orthogonality, complement ray, distinct draws") {
  const PureState e0 = PureState::basis(2, 0);
  const PureState p = random_perp(e0, 3);
  CHECK(std::abs(p[0]) <= 1e-12);
  CHECK(std::abs(std::abs(p[1]) - 1.0) <= 1e-12);

  const PureState psi = haar_random_state(5, 77);
  std::vector<ComplexVector> seen;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const PureState phi = random_perp(psi, s);
    CHECK(std::abs(psi.inner(phi)) <= 1e-12);
    CHECK(std::abs(phi.amplitudes().norm() - 1.0) <= 1e-12);
    for (const auto& prev : seen) CHECK((prev - phi.amplitudes()).norm() > 1e-6);
    seen.push_back(phi.amplitudes());
  }
  try {
    random_perp(PureState::basis(1, 0), 1);
    FAIL("d=1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionTooSmall);
  }
}

TEST_CASE("random_density: rank, purity, trace") {
  const DensityMatrix pure = random_density(4, 1, 11);
  CHECK((pure.matrix() * pure.matrix() - pure.matrix()).norm() <= 1e-10);

  const DensityMatrix full = random_density(2, 2, 12);
  const EigenDecomposition e2 = eig_hermitian(full.matrix());
  CHECK(std::abs(e2.eigenvalues.sum() - 1.0) <= 1e-12);

  const EigenDecomposition e3 = eig_hermitian(random_density(3, 2, 13).matrix());
  CHECK(std::abs(e3.eigenvalues(0)) <= 1e-12);
  CHECK(e3.eigenvalues(1) > 1e-6);

  try {
    random_density(3, 4, 1);
    FAIL("rank > d accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadRank);
  }
}

TEST_CASE("haar_random_unitary is unitary") {
  CHECK(is_unitary(haar_random_unitary(9, 4), 1e-12));
}

TEST_CASE("unitary_power and kron") {
  const ComplexMatrix c = clock(5);
  CHECK((unitary_power(c, 5) - ComplexMatrix::Identity(5, 5)).norm() <= 1e-12);
  CHECK((unitary_power(c, -2) * unitary_power(c, 2) - ComplexMatrix::Identity(5, 5)).norm() <= 1e-12);
  CHECK(kron(pauli_x(), pauli_z()).rows() == 4);
}
