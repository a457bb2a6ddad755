#include "holmc/diagnostics.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <numeric>

#include "holmc/errors.hpp"
#include "holmc/potentials.hpp"

namespace holmc {

GaussianLaw ridge_posterior(const Matrix& X, const Vector& y, const Matrix& prior_cov,
                            double noise_var) {
  if (!(noise_var > 0)) throw Error(ErrorKind::InvalidArgument, "noise variance must be positive");
  const Eigen::Index d = prior_cov.rows();
  if (prior_cov.cols() != d || X.cols() != d || X.rows() != y.size())
    throw Error(ErrorKind::DimensionMismatch, "ridge_posterior: inconsistent dimensions");
  Eigen::LLT<Matrix> prior(sym(prior_cov));
  if (prior.info() != Eigen::Success) throw Error(ErrorKind::SingularPrior, "prior covariance is not SPD");
  const Matrix prior_prec = prior.solve(Matrix::Identity(d, d));
  const Matrix prec = sym(prior_prec + X.transpose() * X / noise_var);
  Eigen::LLT<Matrix> llt(prec);
  GaussianLaw g;
  g.covariance = sym(llt.solve(Matrix::Identity(d, d)));
  g.mean = llt.solve(Vector(X.transpose() * y / noise_var));
  return g;
}

GaussianLaw ridge_posterior(const Matrix& X, const Vector& y, double noise_var, double prior_var) {
  if (!(prior_var > 0)) throw Error(ErrorKind::SingularPrior, "prior variance must be positive");
  return ridge_posterior(X, y, prior_var * Matrix::Identity(X.cols(), X.cols()), noise_var);
}

namespace {

// tr(S1) + tr(S2) − 2 tr((S2^½ S1 S2^½)^½), or a negative value if the series branch
// does not apply.
double trace_term_series(const Matrix& S1, const Matrix& S2) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(S2);
  const Vector s = es.eigenvalues();
  if (s.minCoeff() <= 0) return -1.0;
  const Matrix& U = es.eigenvectors();
  const Matrix E = sym(U.transpose() * S1 * U) - Matrix(s.asDiagonal());
  if (E.norm() > 0.05 * s.minCoeff()) return -1.0;
  const Eigen::Index n = s.size();
  const Vector r = s.cwiseSqrt();
  // In the S2 eigenbasis, (D + X)² = D² + F with D = diag(s), F = R E R.
  // X = X1 + Y where X1 solves the linear Sylvester part; tr(S1) − tr(S2) − 2 tr(X1) = 0.
  Matrix X1(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) X1(i, j) = r(i) * E(i, j) * r(j) / (s(i) + s(j));
  Matrix Y = Matrix::Zero(n, n);
  for (int it = 0; it < 200; ++it) {
    const Matrix Xc = X1 + Y;
    const Matrix Q = Xc * Xc;
    Matrix Ynew(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) Ynew(i, j) = -Q(i, j) / (s(i) + s(j));
    const double change = (Ynew - Y).norm();
    Y = Ynew;
    if (change <= 1e-16 * std::max(Y.norm(), 1e-300)) break;
  }
  return std::max(0.0, -2.0 * Y.trace());
}

}  // namespace

double w2_gaussians(const GaussianLaw& g1, const GaussianLaw& g2) {
  if (g1.mean.size() != g2.mean.size() || g1.covariance.rows() != g2.covariance.rows())
    throw Error(ErrorKind::DimensionMismatch, "w2_gaussians: dimension mismatch");
  const Matrix S1 = sym(g1.covariance);
  const Matrix S2 = sym(g2.covariance);
  const double dm2 = (g1.mean - g2.mean).squaredNorm();
  double tr = trace_term_series(S1, S2);
  if (tr < 0) tr = trace_term_series(S2, S1);
  if (tr < 0) {
    const Matrix R = sqrtm_spd(S2);
    const Matrix C = sqrtm_spd(sym(R * S1 * R));
    tr = std::max(0.0, S1.trace() + S2.trace() - 2.0 * C.trace());
  }
  return std::sqrt(dm2 + tr);
}

GaussianLaw gaussian_fit(const Matrix& samples, Eigen::Index begin, Eigen::Index end, double ridge) {
  const Eigen::Index k = end - begin;
  const Eigen::Index d = samples.cols();
  if (k < d + 1)
    throw Error(ErrorKind::DegenerateFit, "need at least d+1 samples, got " + std::to_string(k));
  const auto block = samples.middleRows(begin, k);
  GaussianLaw g;
  g.mean = block.colwise().mean().transpose();
  const Matrix centered = block.rowwise() - g.mean.transpose();
  g.covariance = sym(centered.transpose() * centered / static_cast<double>(k - 1));
  g.covariance.diagonal().array() += ridge;
  return g;
}

std::vector<long> default_checkpoints(long N) {
  std::vector<long> cps;
  const long step = std::max(1L, N / 200);
  for (long k = step; k <= N; k += step) cps.push_back(k);
  if (cps.empty() || cps.back() != N) cps.push_back(N);
  return cps;
}

W2Curve w2_trace(const std::vector<Matrix>& theta_samples, const GaussianLaw& target,
                 const std::vector<long>& checkpoints, WindowPolicy policy, long window) {
  if (theta_samples.empty()) throw Error(ErrorKind::InvalidArgument, "w2_trace: no seeds");
  if (policy == WindowPolicy::Sliding && window < 1)
    throw Error(ErrorKind::InvalidArgument, "w2_trace: sliding window must be positive");
  const long d = static_cast<long>(target.mean.size());
  W2Curve curve;
  for (long k : checkpoints) {
    const long begin = policy == WindowPolicy::Prefix ? 0 : std::max(0L, k - window);
    if (k - begin < d + 1) {
      curve.skipped.push_back(k);
      continue;
    }
    curve.checkpoints.push_back(k);
  }
  curve.per_seed.resize(theta_samples.size());
  for (std::size_t s = 0; s < theta_samples.size(); ++s) {
    const Matrix& traj = theta_samples[s];
    if (traj.cols() != d) throw Error(ErrorKind::DimensionMismatch, "w2_trace: sample dimension");
    for (long k : curve.checkpoints) {
      if (k > traj.rows()) throw Error(ErrorKind::InvalidArgument, "checkpoint beyond trajectory");
      const long begin = policy == WindowPolicy::Prefix ? 0 : std::max(0L, k - window);
      curve.per_seed[s].push_back(w2_gaussians(gaussian_fit(traj, begin, k), target));
    }
  }
  const std::size_t nc = curve.checkpoints.size();
  curve.mean.assign(nc, 0.0);
  curve.half_std.assign(nc, 0.0);
  const double ns = static_cast<double>(theta_samples.size());
  for (std::size_t c = 0; c < nc; ++c) {
    double sum = 0.0, sq = 0.0;
    for (const auto& row : curve.per_seed) sum += row[c];
    const double mu = sum / ns;
    for (const auto& row : curve.per_seed) sq += (row[c] - mu) * (row[c] - mu);
    curve.mean[c] = mu;
    curve.half_std[c] = 0.5 * std::sqrt(sq / ns);
  }
  return curve;
}

std::vector<double> classification_accuracy(const Matrix& samples, const Matrix& X_test,
                                            const Vector& y_test,
                                            const std::vector<long>& k_prefixes) {
  if (X_test.rows() == 0 || y_test.size() == 0) throw Error(ErrorKind::EmptyTestSet, "empty test set");
  if (X_test.rows() != y_test.size() || X_test.cols() != samples.cols())
    throw Error(ErrorKind::DimensionMismatch, "classification_accuracy: dimension mismatch");
  std::vector<double> acc;
  Vector running = Vector::Zero(samples.cols());
  long taken = 0;
  for (long k : k_prefixes) {
    if (k < 1 || k > samples.rows())
      throw Error(ErrorKind::InvalidArgument, "prefix length out of range");
    if (k < taken) {
      running.setZero();
      taken = 0;
    }
    for (; taken < k; ++taken) running += samples.row(taken).transpose();
    const Vector theta_bar = running / static_cast<double>(k);
    const Vector z = X_test * theta_bar;
    long correct = 0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      const double label = sigmoid(z(i)) >= 0.5 ? 1.0 : 0.0;
      if (label == y_test(i)) ++correct;
    }
    acc.push_back(static_cast<double>(correct) / static_cast<double>(z.size()));
  }
  return acc;
}

SlopeFit fit_order_slope(const std::vector<double>& eta, const std::vector<double>& error) {
  if (eta.size() != error.size()) throw Error(ErrorKind::DimensionMismatch, "fit_order_slope: sizes differ");
  if (eta.size() < 2) throw Error(ErrorKind::SlopeUndefined, "need at least two points");
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (!(error[i] > 0) || !(eta[i] > 0))
      throw Error(ErrorKind::NonPositiveError, "errors and step sizes must be positive");
  const std::size_t n = eta.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = std::log(eta[i]);
    ly[i] = std::log(error[i]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0)) throw Error(ErrorKind::SlopeUndefined, "step sizes must not all be equal");
  SlopeFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (n > 2) {
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ly[i] - (f.intercept + f.slope * lx[i]);
      rss += r * r;
    }
    const double se = std::sqrt(rss / (n - 2) / sxx);
    boost::math::students_t dist(static_cast<double>(n - 2));
    f.half_width95 = boost::math::quantile(boost::math::complement(dist, 0.025)) * se;
  } else {
    f.half_width95 = std::numeric_limits<double>::quiet_NaN();
  }
  return f;
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * (i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw Error(ErrorKind::InvalidArgument, "spearman: need two equal-length series");
  const auto ra = ranks(a), rb = ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace holmc
