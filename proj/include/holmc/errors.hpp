#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holmc {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  NotFactorizable,
  NotPSD,
  Overflow,
  NotContractive,
  InvalidOrder,
  DegenerateSpectrum,
  FrictionTooSmall,
  EmptyDataset,
  DegreeUnsupported,
  UnsupportedPotential,
  QuadratureNotConverged,
  SingularPrior,
  DegenerateFit,
  EmptyTestSet,
  NonPositiveError,
  SlopeUndefined,
  MissingColumn,
  NonNumericCell,
  EmptyFile,
  NonBinaryTarget,
  AllConfigsFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace holmc
