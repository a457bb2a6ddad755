#include "holmc/sampler.hpp"

#include <cmath>

#include "holmc/errors.hpp"
#include "holmc/kernel4.hpp"

namespace holmc {

InitPolicy parse_init_policy(const std::string& s) {
  if (s == "minimizer_zero") return InitPolicy::MinimizerZero;
  if (s == "standard_normal") return InitPolicy::StandardNormal;
  throw Error(ErrorKind::InvalidArgument, "unknown init policy '" + s + "'");
}

std::string to_string(InitPolicy p) {
  return p == InitPolicy::MinimizerZero ? "minimizer_zero" : "standard_normal";
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t chain) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ (chain * 0xd1b54a32d192ed03ULL + 1));
}

ChainRng::ChainRng(std::uint64_t seed, std::uint64_t chain)
    : key_(stream_key(seed, chain)), engine_(key_) {}

Vector ChainRng::normal_vector(Eigen::Index n) {
  Vector u(n);
  for (Eigen::Index i = 0; i < n; ++i) u(i) = normal();
  return u;
}

Vector draw_mvn_factor(const Vector& mean, const Matrix& chol, ChainRng& rng) {
  if (chol.rows() != mean.size())
    throw Error(ErrorKind::DimensionMismatch, "draw_mvn: factor and mean differ in size");
  return mean + chol.triangularView<Eigen::Lower>() * rng.normal_vector(mean.size());
}

Vector draw_mvn(const Vector& mean, const Matrix& covariance, ChainRng& rng, double jitter0,
                double* jitter_used) {
  if (covariance.rows() != mean.size() || covariance.cols() != mean.size())
    throw Error(ErrorKind::DimensionMismatch, "draw_mvn: covariance and mean differ in size");
  const auto chol = cholesky_with_jitter(covariance, jitter0);
  if (jitter_used) *jitter_used = chol.jitter;
  return draw_mvn_factor(mean, chol.L, rng);
}

Kernel4Provider::Kernel4Provider(std::shared_ptr<const PotentialModel> potential, double gamma,
                                 double eta)
    : potential_(std::move(potential)), gamma_(gamma), eta_(eta) {
  cov_ = kron_identity(sigma_entries(gamma, eta), potential_->dim());
}

Vector Kernel4Provider::mean(const Vector& x) const {
  return step_law(x, *potential_, gamma_, eta_).mean;
}

GeneralProvider::GeneralProvider(std::shared_ptr<const PotentialModel> potential, int P,
                                 double gamma, double eta, CenterPolicy policy)
    : potential_(std::move(potential)), P_(P), gamma_(gamma), eta_(eta), policy_(policy) {
  cov_ = kron_identity(covariance_universal(P, gamma, eta), potential_->dim());
}

Vector GeneralProvider::mean(const Vector& x) const {
  return mean_general(P_, gamma_, eta_, x, *potential_, 3, policy_).mean;
}

Vector find_minimizer(const PotentialModel& potential, int max_iter) {
  Vector theta = Vector::Zero(potential.dim());
  for (int it = 0; it < max_iter; ++it) {
    const Vector g = potential.gradient(theta);
    if (g.norm() <= 1e-10) return theta;
    const Vector step = potential.hessian(theta).ldlt().solve(g);
    // Backtracking on U keeps the iteration monotone far from the minimum.
    const double u0 = potential.value(theta);
    double t = 1.0;
    while (t > 1e-8 && potential.value(theta - t * step) > u0 - 1e-4 * t * g.dot(step)) t *= 0.5;
    theta -= t * step;
  }
  if (potential.gradient(theta).norm() > 1e-8)
    throw Error(ErrorKind::InvalidArgument, "Newton solve for the minimizer did not converge");
  return theta;
}

Vector initial_state(const ChainConfig& config, const PotentialModel& potential, ChainRng& rng) {
  const int d = potential.dim();
  Vector x = Vector::Zero(static_cast<Eigen::Index>(config.P) * d);
  if (config.init == InitPolicy::MinimizerZero)
    x.head(d) = find_minimizer(potential);
  else
    x.head(d) = rng.normal_vector(d);
  return x;
}

Trajectory run_chain(const StepLawProvider& provider, const ChainConfig& config, const Vector& x0,
                     ChainRng& rng) {
  if (config.N < 1) throw Error(ErrorKind::InvalidArgument, "chain length N must be at least 1");
  if (!(config.eta > 0)) throw Error(ErrorKind::InvalidArgument, "step size must be positive");
  if (config.burn_in < 0 || config.burn_in >= config.N)
    throw Error(ErrorKind::InvalidArgument, "burn-in must lie in [0, N)");
  const int P = provider.P();
  const int d = provider.dim();
  if (x0.size() != static_cast<Eigen::Index>(P) * d)
    throw Error(ErrorKind::DimensionMismatch, "initial state must have length P·d");

  const auto chol = cholesky_with_jitter(provider.covariance(), config.jitter0);
  Trajectory traj;
  traj.P = P;
  traj.d = d;
  traj.jitter = chol.jitter;
  traj.rng_fingerprint = rng.key();
  traj.states.resize(config.N - config.burn_in, x0.size());

  const AffineGaussianKernel* affine = provider.affine();
  Vector x = x0;
  for (long k = 0; k < config.N; ++k) {
    try {
      const Vector m = affine ? Vector(affine->T * x + affine->c) : provider.mean(x);
      x = draw_mvn_factor(m, chol.L, rng);
    } catch (const Error& e) {
      throw Error(e.kind(), "iteration " + std::to_string(k) + ": " + e.what());
    }
    if (!x.allFinite())
      throw Error(ErrorKind::NotContractive,
                  "state diverged at iteration " + std::to_string(k) + " (step size too large?)");
    if (k >= config.burn_in) traj.states.row(k - config.burn_in) = x.transpose();
  }
  return traj;
}

Trajectory run_chain(const StepLawProvider& provider, const ChainConfig& config,
                     const PotentialModel& potential) {
  ChainRng rng(config.seed, config.chain);
  const Vector x0 = initial_state(config, potential, rng);
  return run_chain(provider, config, x0, rng);
}

StationaryLaw stationary_law_affine(const Matrix& T, const Vector& c, const Matrix& Sigma) {
  const Eigen::Index n = T.rows();
  if (T.cols() != n || c.size() != n || Sigma.rows() != n || Sigma.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "stationary_law_affine: inconsistent sizes");
  StationaryLaw law;
  law.covariance = solve_discrete_lyapunov(T, Sigma);  // checks the spectral radius
  const Matrix IminusT = Matrix::Identity(n, n) - T;
  law.mean = IminusT.partialPivLu().solve(c);
  // One refinement step keeps the fixed-point residual at round-off level.
  law.mean += IminusT.partialPivLu().solve(Vector(c - IminusT * law.mean));
  return law;
}

StationaryLaw stationary_law_affine(const AffineGaussianKernel& kernel) {
  return stationary_law_affine(kernel.T, kernel.c, kernel.Sigma);
}

}  // namespace holmc
