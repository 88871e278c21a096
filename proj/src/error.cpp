#include "urbound/error.hpp"

namespace urbound {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadDimension: return "BadDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotDensityMatrix: return "NotDensityMatrix";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::BadRank: return "BadRank";
    case Errc::NotUnitVector: return "NotUnitVector";
    case Errc::NotWeylPair: return "NotWeylPair";
    case Errc::NonFinite: return "NonFinite";
    case Errc::DegenerateDecomposition: return "DegenerateDecomposition";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::DegeneratePerp: return "DegeneratePerp";
    case Errc::DegenerateVariance: return "DegenerateVariance";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::ParallelDirections: return "ParallelDirections";
    case Errc::BoundViolated: return "BoundViolated";
  }
  return "Unknown";
}

}  // namespace urbound
