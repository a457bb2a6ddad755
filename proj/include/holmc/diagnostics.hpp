#pragma once

#include <vector>

#include "holmc/numerics.hpp"

namespace holmc {

struct GaussianLaw {
  Vector mean;
  Matrix covariance;
};

/// Conjugate posterior of θ ~ N(0, prior_cov), y | θ ~ N(Xθ, ξ²I):
/// V = (Σ⁻¹ + XᵀX/ξ²)⁻¹, m = V Xᵀy/ξ².
GaussianLaw ridge_posterior(const Matrix& X, const Vector& y, const Matrix& prior_cov,
                            double noise_var);
/// Isotropic prior N(0, prior_var·I); the default prior variance is 10.
GaussianLaw ridge_posterior(const Matrix& X, const Vector& y, double noise_var,
                            double prior_var = 10.0);

/// Wasserstein-2 distance between Gaussians. Nearly equal covariances use a cancellation-free
/// perturbation series for the trace term.
double w2_gaussians(const GaussianLaw& g1, const GaussianLaw& g2);

/// Sample mean and covariance of rows [begin, end) with a 1e-9 ridge.
GaussianLaw gaussian_fit(const Matrix& samples, Eigen::Index begin, Eigen::Index end,
                         double ridge = tol::kW2FitRidge);

enum class WindowPolicy { Prefix, Sliding };

struct W2Curve {
  std::vector<long> checkpoints;              // sample counts k at which the fit is taken
  std::vector<std::vector<double>> per_seed;  // [seed][checkpoint]
  std::vector<double> mean;
  std::vector<double> half_std;               // 0.5 × population std across seeds
  std::vector<long> skipped;                  // checkpoints dropped (fewer than d+1 samples)
};

/// Checkpoints every max(1, N/200) samples, ending at N.
std::vector<long> default_checkpoints(long N);

/// W2 of a Gaussian fit of each seed's θ-samples (rows) at each checkpoint against the target.
W2Curve w2_trace(const std::vector<Matrix>& theta_samples, const GaussianLaw& target,
                 const std::vector<long>& checkpoints, WindowPolicy policy = WindowPolicy::Prefix,
                 long window = 0);

/// Accuracy of the plug-in predictor σ(X θ̄ₖ) ≥ ½ (ties to class 1) with θ̄ₖ the mean of
/// the first k samples, for each k in k_prefixes.
std::vector<double> classification_accuracy(const Matrix& samples, const Matrix& X_test,
                                            const Vector& y_test,
                                            const std::vector<long>& k_prefixes);

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double half_width95 = 0;  // 95% band on the slope (NaN with two points)
};

/// Least-squares slope of log(error) against log(η).
SlopeFit fit_order_slope(const std::vector<double>& eta, const std::vector<double>& error);

/// Spearman rank correlation.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace holmc
