#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "holmc/constants.hpp"

namespace holmc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct CholeskyResult {
  Matrix L;           // lower triangular, L Lᵀ = M + jitter·I
  double jitter = 0;  // the δ actually used
};

/// Cholesky factor of a symmetric matrix, retrying with δ ∈ {0, jitter0, 10·jitter0, …, 1e-2}.
/// Throws NotFactorizable when the largest jitter still fails.
CholeskyResult cholesky_with_jitter(const Matrix& M, double jitter0 = tol::kJitter0);

/// Symmetric PSD square root. Eigenvalues within −1e-10·‖M‖ are clamped to zero.
Matrix sqrtm_spd(const Matrix& M);

/// Matrix exponential by Padé scaling and squaring.
Matrix expm(const Matrix& G);

struct ExpmGramian {
  Matrix phi;      // e^{G t}
  Matrix gramian;  // ∫₀ᵗ e^{G(t−s)} Q e^{Gᵀ(t−s)} ds
};

/// Van Loan block exponential: returns both e^{Gt} and the Gramian from one expm.
ExpmGramian expm_with_gramian(const Matrix& G, const Matrix& Q, double t);

/// ∫₀ᵗ e^{G(t−s)} Q e^{Gᵀ(t−s)} ds.
Matrix van_loan_gramian(const Matrix& G, const Matrix& Q, double t);

double spectral_radius(const Matrix& T);

/// Σ = T Σ Tᵀ + Q by the doubling iteration. Throws NotContractive if ρ(T) ≥ 1 − 1e-12.
Matrix solve_discrete_lyapunov(const Matrix& T, const Matrix& Q);

struct ComplexEigenDecomposition {
  CVector eigenvalues;
  CMatrix eigenvectors;  // unit-norm columns
  double condition_estimate = 0;
};

ComplexEigenDecomposition eigen_decompose(const Matrix& B);

/// Gauss-Legendre nodes and weights on [a, b].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a = -1.0,
                                                                    double b = 1.0);

/// Symmetric part (M + Mᵀ)/2.
inline Matrix sym(const Matrix& M) { return 0.5 * (M + M.transpose()); }

/// Kronecker product A ⊗ I_d.
Matrix kron_identity(const Matrix& A, int d);

}  // namespace holmc
