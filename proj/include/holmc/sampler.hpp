#pragma once

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <cstdint>
#include <memory>
#include <string>

#include "holmc/kernel_general.hpp"
#include "holmc/numerics.hpp"
#include "holmc/potentials.hpp"

namespace holmc {

enum class InitPolicy { MinimizerZero, StandardNormal };

InitPolicy parse_init_policy(const std::string& s);
std::string to_string(InitPolicy p);

struct ChainConfig {
  int P = 4;
  double gamma = 1.0;
  double eta = 0.011;
  long N = 1000;
  std::uint64_t seed = 0;
  std::uint64_t chain = 0;  // stream index under the same master seed
  InitPolicy init = InitPolicy::MinimizerZero;
  double jitter0 = tol::kJitter0;
  long burn_in = 0;
};

/// Independent normal stream keyed by (master seed, chain index). The stream depends only on
/// the key, so results do not depend on thread scheduling.
class ChainRng {
 public:
  ChainRng(std::uint64_t seed, std::uint64_t chain);

  double normal() { return normal_(engine_); }
  Vector normal_vector(Eigen::Index n);
  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  boost::random::mt19937_64 engine_;
  boost::random::normal_distribution<double> normal_;
};

/// Stream key; SplitMix64 finalizer over both words.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t chain);

/// mean + L·u with L from cholesky_with_jitter. `jitter_used` receives the δ actually applied.
Vector draw_mvn(const Vector& mean, const Matrix& covariance, ChainRng& rng,
                double jitter0 = tol::kJitter0, double* jitter_used = nullptr);
/// Same draw from a precomputed lower Cholesky factor.
Vector draw_mvn_factor(const Vector& mean, const Matrix& chol, ChainRng& rng);

/// One-step Gaussian law x ↦ N(mean(x), Σ) with a state-independent covariance, which holds
/// for every kernel here (the covariance is the same table for every potential).
class StepLawProvider {
 public:
  virtual ~StepLawProvider() = default;
  virtual int P() const = 0;
  virtual int dim() const = 0;  // d
  virtual Vector mean(const Vector& x) const = 0;
  virtual const Matrix& covariance() const = 0;
  /// Affine kernels expose (T, c) so the loop can run x ← Tx + c + noise.
  virtual const AffineGaussianKernel* affine() const { return nullptr; }
};

class AffineProvider final : public StepLawProvider {
 public:
  explicit AffineProvider(AffineGaussianKernel k) : k_(std::move(k)) {}
  int P() const override { return k_.P; }
  int dim() const override { return static_cast<int>(k_.c.size()) / k_.P; }
  Vector mean(const Vector& x) const override { return k_.T * x + k_.c; }
  const Matrix& covariance() const override { return k_.Sigma; }
  const AffineGaussianKernel* affine() const override { return &k_; }

 private:
  AffineGaussianKernel k_;
};

/// Closed-form fourth-order kernel for logistic (or quadratic) potentials.
class Kernel4Provider final : public StepLawProvider {
 public:
  Kernel4Provider(std::shared_ptr<const PotentialModel> potential, double gamma, double eta);
  int P() const override { return 4; }
  int dim() const override { return potential_->dim(); }
  Vector mean(const Vector& x) const override;
  const Matrix& covariance() const override { return cov_; }

 private:
  std::shared_ptr<const PotentialModel> potential_;
  double gamma_, eta_;
  Matrix cov_;
};

/// General-P kernel: quadrature mean and the universal covariance.
class GeneralProvider final : public StepLawProvider {
 public:
  GeneralProvider(std::shared_ptr<const PotentialModel> potential, int P, double gamma, double eta,
                  CenterPolicy policy = CenterPolicy::CurrentIterate);
  int P() const override { return P_; }
  int dim() const override { return potential_->dim(); }
  Vector mean(const Vector& x) const override;
  const Matrix& covariance() const override { return cov_; }

 private:
  std::shared_ptr<const PotentialModel> potential_;
  int P_;
  double gamma_, eta_;
  CenterPolicy policy_;
  Matrix cov_;
};

struct Trajectory {
  Matrix states;  // one row per retained iteration, Pd columns
  int P = 0, d = 0;
  std::uint64_t rng_fingerprint = 0;
  double jitter = 0;  // δ used to factor the step covariance

  /// θ-marginal view (first d columns).
  auto theta() const { return states.leftCols(d); }
};

/// Damped Newton on U from θ = 0, to gradient norm 1e-10.
Vector find_minimizer(const PotentialModel& potential, int max_iter = 200);

Vector initial_state(const ChainConfig& config, const PotentialModel& potential, ChainRng& rng);

/// Runs N steps from x0; retains iterations after burn_in.
Trajectory run_chain(const StepLawProvider& provider, const ChainConfig& config, const Vector& x0,
                     ChainRng& rng);
/// Builds the RNG from (seed, chain) and the initial state from the init policy.
Trajectory run_chain(const StepLawProvider& provider, const ChainConfig& config,
                     const PotentialModel& potential);

struct StationaryLaw {
  Vector mean;
  Matrix covariance;
};

/// m∞ = (I−T)⁻¹c and Σ∞ = TΣ∞Tᵀ + Σ. Throws NotContractive if ρ(T) ≥ 1.
StationaryLaw stationary_law_affine(const Matrix& T, const Vector& c, const Matrix& Sigma);
StationaryLaw stationary_law_affine(const AffineGaussianKernel& kernel);

}  // namespace holmc
