#pragma once

// Tolerances shared by production code and tests.
namespace holmc::tol {

inline constexpr double kJitter0 = 1e-6;
inline constexpr double kJitterMax = 1e-2;
inline constexpr double kPsdBand = 1e-10;           // relative negative-eigenvalue band
inline constexpr double kContractiveMargin = 1e-12;  // spectral radius must stay below 1 - margin
inline constexpr double kDiagonalizableCond = 1e8;
inline constexpr double kLmiFeasible = 1e-8;
inline constexpr double kQuadratureWarn = 1e-8;
inline constexpr double kQuadratureError = 1e-5;
inline constexpr int kMinSubsteps = 64;
inline constexpr int kDefaultSubsteps = 256;
inline constexpr double kW2FitRidge = 1e-9;
inline constexpr double kLogitClamp = 500.0;

}  // namespace holmc::tol
