#pragma once

#include <cstddef>
#include <cstdint>

#include "urbound/linalg.hpp"

namespace urbound {

// Seeded samplers. Every function builds its own std::mt19937_64 from the seed,
// so results depend only on the arguments.

/// Unitarily invariant pure state: i.i.d. standard complex Gaussian
/// components, normalized.
PureState haar_random_state(std::size_t dim, std::uint64_t seed);

/// Haar-distributed state orthogonal to `psi`. Throws DimensionTooSmall for d = 1.
PureState random_perp(const PureState& psi, std::uint64_t seed);

/// rho = sum_i p_i |psi_i><psi_i| with Haar psi_i and flat-Dirichlet weights.
/// Throws BadRank unless 1 <= rank <= dim.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Haar unitary via QR of a complex Ginibre matrix with the R-diagonal phases
/// fixed.
ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed);

/// Uniformly distributed real unit vector in R^n.
Eigen::VectorXd random_unit_vector(std::size_t n, std::uint64_t seed);

/// Deterministic seed fan-out for grid point `index`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return seed ^ index;
}

}  // namespace urbound
