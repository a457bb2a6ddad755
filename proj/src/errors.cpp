#include "holmc/errors.hpp"

namespace holmc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotFactorizable: return "NotFactorizable";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotContractive: return "NotContractive";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::FrictionTooSmall: return "FrictionTooSmall";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorKind::UnsupportedPotential: return "UnsupportedPotential";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::SingularPrior: return "SingularPrior";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::EmptyTestSet: return "EmptyTestSet";
    case ErrorKind::NonPositiveError: return "NonPositiveError";
    case ErrorKind::SlopeUndefined: return "SlopeUndefined";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::NonNumericCell: return "NonNumericCell";
    case ErrorKind::EmptyFile: return "EmptyFile";
    case ErrorKind::NonBinaryTarget: return "NonBinaryTarget";
    case ErrorKind::AllConfigsFailed: return "AllConfigsFailed";
  }
  return "Unknown";
}

}  // namespace holmc
