#pragma once

#include <optional>
#include <string>

#include "holmc/numerics.hpp"

namespace holmc {

enum class KappaConvention { Theory, ExampleCompat };

KappaConvention parse_kappa_convention(const std::string& s);
std::string to_string(KappaConvention c);

struct CertificateInputs {
  int P = 4;
  double m = 1.0;
  double L = 1.0;
  std::optional<double> gamma;  // empty means "auto" (γ = γ₀)
  double epsilon_policy = 0.5;  // fraction of λ̂ used when B_sim is not diagonalizable
  KappaConvention convention = KappaConvention::Theory;
};

struct HResult {
  Matrix H;
  bool diagonalizable = true;
  double condition = 0;  // eigenvector matrix condition number
  double epsilon = 0;    // ε actually used (0 when diagonalizable)
};

struct HConstants {
  double h1 = 0, h2 = 1, h3 = 1, h4 = 0, h5 = 0;
  double kappa = 0;
};

struct ContractionCertificate {
  int P = 0;
  double m = 0, L = 0;
  KappaConvention convention = KappaConvention::Theory;
  CVector spectrum;
  double lambda_hat = 0;
  double kappa = 0;
  bool diagonalizable = true;
  double epsilon = 0;
  Matrix H;
  double h1 = 0, h2 = 1, h3 = 1, h4 = 0, h5 = 0;
  double gamma0 = 0;
  double gamma = 0;
  double rho = 0;
  Matrix M_sim;
  double lambda_min_M = 0, lambda_max_M = 0;
  double eta_star = 0;
};

struct LmiReport {
  double max_eigenvalue = 0;  // λ_max(M J_b + J_bᵀ M + 2ρM)
  double m_norm = 0;          // ‖M‖ (spectral)
  bool feasible = false;
};

/// (P−1)×(P−1) matrix: superdiagonal −1, subdiagonal +1, bottom-right entry 1.
Matrix build_bsim(int P);

struct BsimSpectrum {
  CVector eigenvalues;  // sorted by real part, then imaginary part
  double lambda_hat = 0;
};

BsimSpectrum spectrum_bsim(int P);

/// H = Re Σ vᵢ v̄ᵢᵀ from left eigenvectors of B_sim scaled to last component 1.
HResult compute_H(int P, double epsilon_policy = 0.5);

HConstants compute_h_constants(const HResult& h, int P, KappaConvention convention);

double gamma_zero(double L, double h1, double h2, double h4, double h5, double kappa);

/// [[1, 1ᵀ/γ], [1/γ, κ/(L·h1)·H]].
Matrix assemble_m_sim(const Matrix& H, double kappa, double L, double h1, double gamma);

ContractionCertificate build_certificate(const CertificateInputs& in);

/// Jacobian of the drift at a point with Hessian `hessian` (d×d), size P·d.
Matrix build_drift_jacobian(int P, double gamma, const Matrix& hessian);

LmiReport verify_contraction_lmi(const ContractionCertificate& cert, const Matrix& hessian);

}  // namespace holmc
