#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace urbound {

enum class Errc {
  BadDimension,
  DimensionMismatch,
  DimensionTooSmall,
  NotHermitian,
  NotUnitary,
  NotNormalized,
  NotDensityMatrix,
  NoConvergence,
  BadRank,
  NotUnitVector,
  NotWeylPair,
  NonFinite,
  DegenerateDecomposition,
  DegenerateDenominator,
  DegeneratePerp,
  DegenerateVariance,
  NotOrthogonal,
  ParallelDirections,
  BoundViolated,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace urbound
