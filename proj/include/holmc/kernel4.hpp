#pragma once

#include <array>

#include "holmc/numerics.hpp"
#include "holmc/potentials.hpp"

namespace holmc {

using MuTable = Eigen::Matrix4d;
using SigmaTable = Eigen::Matrix4d;

/// Closed-form μ_ij(γ, η) of the zero-potential fourth-order stage map.
MuTable mu_coefficients(double gamma, double eta);

/// σ_ij(γ, η); the step covariance is σ ⊗ I_d.
SigmaTable sigma_entries(double gamma, double eta);

/// Noise kernel of component i (θ, v1, v2, v3) at the end of the step:
/// x_i(η) contains ∫₀^η K_i(η − s) dB_s.
double ito_kernel(int i, double gamma, double u);

/// All scalar coefficients of the fourth-order step for fixed (γ, η).
struct Kernel4Coefficients {
  double gamma = 0, eta = 0;
  MuTable mu;
  SigmaTable sigma;
  // quad[i][var][k]: coefficient of A^k·var in m_i, var ∈ {θ, v1, v2, v3, −b}.
  std::array<std::array<std::array<double, 3>, 5>, 4> quad{};
  // logistic[i][var][k]: coefficient of λ^k·var in m_i, var ∈ {θ, v1, v2, v3, M0, M1, M2, M3}.
  std::array<std::array<std::array<double, 3>, 8>, 4> logistic{};
};

Kernel4Coefficients kernel4_coefficients(double gamma, double eta);

/// Mean (m0, m1, m2, m3) stacked into a 4d vector for U(θ) = ½θᵀAθ − bᵀθ.
Vector mean_quadratic(const Kernel4Coefficients& k, const Vector& x, const Matrix& A,
                      const Vector& b);
Vector mean_quadratic(const Vector& x, const Matrix& A, const Vector& b, double gamma, double eta);

/// The quadratic step as an affine map x ↦ T x + c.
struct AffineMap {
  Matrix T;
  Vector c;
};
AffineMap affine_quadratic(const Kernel4Coefficients& k, const Matrix& A, const Vector& b);

/// Mean for the logistic potential with the degree-3 line surrogate.
Vector mean_logistic(const Kernel4Coefficients& k, const Vector& x, const LogisticPotential& pot);
Vector mean_logistic(const Vector& x, const LogisticPotential& pot, double gamma, double eta);

struct StepLaw4 {
  Vector mean;        // 4d
  SigmaTable sigma;   // lifted as σ ⊗ I_d
  Matrix covariance() const;
};

StepLaw4 step_law(const Vector& x, const PotentialModel& potential, double gamma, double eta);

}  // namespace holmc
