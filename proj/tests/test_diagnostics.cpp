#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "holmc/diagnostics.hpp"
#include "holmc/errors.hpp"

using namespace holmc;

namespace {

std::mt19937_64 gen(2024);

Matrix randn(Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> nd;
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = nd(gen);
  return m;
}

GaussianLaw random_law(int d) {
  const Matrix G = randn(d, d);
  return {randn(d, 1), G * G.transpose() + 0.1 * Matrix::Identity(d, d)};
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Ridge, NoDataGivesPrior) {
  const auto p = ridge_posterior(Matrix::Zero(5, 2), Vector::Ones(5), 1.0, 3.0);
  EXPECT_LT(p.mean.norm(), 1e-15);
  EXPECT_LT((p.covariance - 3.0 * Matrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(Ridge, ScalarExample) {
  Matrix X(1, 1);
  X << 1;
  Vector y(1);
  y << 2;
  const auto p = ridge_posterior(X, y, 1.0, 10.0);
  EXPECT_NEAR(p.mean(0), 20.0 / 11.0, 1e-14);
  EXPECT_NEAR(p.covariance(0, 0), 10.0 / 11.0, 1e-14);
}

TEST(Ridge, PosteriorShrinksPriorAndFlatPriorGivesLeastSquares) {
  const Matrix X = randn(50, 3);
  const Vector y = randn(50, 1);
  const auto p = ridge_posterior(X, y, 0.5, 2.0);
  const Matrix gap = 2.0 * Matrix::Identity(3, 3) - p.covariance;
  EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix>(gap).eigenvalues().minCoeff(), -1e-12);
  const auto flat = ridge_posterior(X, y, 0.5, 1e8);
  const Vector ls = X.colPivHouseholderQr().solve(y);
  EXPECT_LT((flat.mean - ls).norm(), 1e-6);
  EXPECT_EQ(kind_of([&] { ridge_posterior(X, y, Matrix::Zero(3, 3), 1.0); }), ErrorKind::SingularPrior);
}

TEST(W2, BasicProperties) {
  const GaussianLaw a{Vector::Zero(2), Matrix::Identity(2, 2)};
  GaussianLaw b = a;
  b.mean << 1, 1;
  EXPECT_NEAR(w2_gaussians(a, b), std::sqrt(2.0), 1e-14);
  EXPECT_EQ(w2_gaussians(a, a), 0.0);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_law(3), q = random_law(3);
    EXPECT_NEAR(w2_gaussians(p, q), w2_gaussians(q, p), 1e-10);
    EXPECT_GE(w2_gaussians(p, q), (p.mean - q.mean).norm() - 1e-12);
  }
}

TEST(W2, CommutingCovariancesHaveClosedForm) {
  Vector s1(3), s2(3);
  s1 << 1, 4, 9;
  s2 << 2, 1, 0.25;
  const GaussianLaw p{Vector::Zero(3), s1.asDiagonal()}, q{Vector::Zero(3), s2.asDiagonal()};
  const double ref = (s1.cwiseSqrt() - s2.cwiseSqrt()).norm();
  EXPECT_NEAR(w2_gaussians(p, q), ref, 1e-12);
}

TEST(W2, NearlyEqualCovariancesStayAccurate) {
  const auto p = random_law(3);
  GaussianLaw q = p;
  const Matrix E = 1e-7 * randn(3, 3);
  q.covariance += E * E.transpose();
  const double w = w2_gaussians(p, q);
  EXPECT_TRUE(std::isfinite(w));
  EXPECT_GE(w, 0.0);
  EXPECT_LT(w, 1e-6);
}

TEST(W2, TriangleInequality) {
  for (int i = 0; i < 100; ++i) {
    const auto a = random_law(2), b = random_law(2), c = random_law(2);
    EXPECT_LE(w2_gaussians(a, c), w2_gaussians(a, b) + w2_gaussians(b, c) + 1e-10);
  }
}

TEST(Trace, IidSamplesConverge) {
  const GaussianLaw target{Vector::Zero(2), Matrix::Identity(2, 2)};
  const std::vector<Matrix> runs = {randn(10000, 2)};
  const auto cps = default_checkpoints(10000);
  EXPECT_EQ(cps.back(), 10000);
  EXPECT_EQ(cps.front(), 50);
  const auto curve = w2_trace(runs, target, cps);
  EXPECT_LE(curve.mean.back(), 0.1);
  EXPECT_EQ(curve.half_std.back(), 0.0);
}

TEST(Trace, ConstantTrajectoryIsBoundedBelow) {
  const GaussianLaw target{Vector::Zero(1), Matrix::Identity(1, 1)};
  const std::vector<Matrix> runs = {Matrix::Constant(200, 1, 0.0)};
  const auto curve = w2_trace(runs, target, {50, 100, 200});
  for (double w : curve.mean) EXPECT_GE(w, 0.99);
}

TEST(Trace, SkipsUnderdeterminedCheckpoints) {
  const GaussianLaw target{Vector::Zero(3), Matrix::Identity(3, 3)};
  const std::vector<Matrix> runs = {randn(100, 3), randn(100, 3)};
  const auto curve = w2_trace(runs, target, {1, 3, 4, 100});
  EXPECT_EQ(curve.skipped, (std::vector<long>{1, 3}));
  EXPECT_EQ(curve.checkpoints, (std::vector<long>{4, 100}));
  EXPECT_EQ(curve.per_seed.size(), 2u);
  EXPECT_EQ(kind_of([&] { gaussian_fit(runs[0], 0, 3); }), ErrorKind::DegenerateFit);
}

TEST(Trace, SlidingWindowUsesRecentSamples) {
  const GaussianLaw target{Vector::Zero(1), Matrix::Identity(1, 1)};
  Matrix s = randn(2000, 1);
  s.topRows(1000).array() += 50.0;
  const auto prefix = w2_trace({s}, target, {2000});
  const auto sliding = w2_trace({s}, target, {2000}, WindowPolicy::Sliding, 500);
  EXPECT_GT(prefix.mean.back(), 10.0);
  EXPECT_LT(sliding.mean.back(), 0.3);
}

TEST(Accuracy, Examples) {
  Matrix X(4, 1);
  X << 1, -1, 2, 0;
  Vector y(4);
  y << 1, 0, 1, 1;
  Matrix samples(2, 1);
  samples << 1, -3;
  const auto acc = classification_accuracy(samples, X, y, {1, 2});
  EXPECT_DOUBLE_EQ(acc[0], 1.0);  // θ̄ = 1; x = 0 ties to class 1
  EXPECT_DOUBLE_EQ(acc[1], 0.25);  // θ̄ = −1
  EXPECT_EQ(kind_of([&] { classification_accuracy(samples, Matrix(0, 1), Vector(0), {1}); }),
            ErrorKind::EmptyTestSet);
}

TEST(Slope, RecoversPowerLaws) {
  std::vector<double> eta = {0.01, 0.02, 0.04, 0.08}, e2, e35;
  for (double h : eta) {
    e2.push_back(h * h);
    e35.push_back(3 * std::pow(h, 3.5));
  }
  const auto f2 = fit_order_slope(eta, e2);
  EXPECT_NEAR(f2.slope, 2.0, 1e-12);
  EXPECT_NEAR(f2.half_width95, 0.0, 1e-10);
  const auto f35 = fit_order_slope(eta, e35);
  EXPECT_NEAR(f35.slope, 3.5, 1e-12);
  EXPECT_NEAR(f35.intercept, std::log(3.0), 1e-10);
  EXPECT_TRUE(std::isnan(fit_order_slope({0.1, 0.2}, {1.0, 2.0}).half_width95));
}

TEST(Slope, Errors) {
  EXPECT_EQ(kind_of([] { fit_order_slope({0.1}, {1.0}); }), ErrorKind::SlopeUndefined);
  EXPECT_EQ(kind_of([] { fit_order_slope({0.1, 0.2}, {1.0, 0.0}); }), ErrorKind::NonPositiveError);
}

TEST(Spearman, RanksWithTies) {
  EXPECT_NEAR(spearman({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0, 1e-15);
  EXPECT_NEAR(spearman({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-15);
  const double r = spearman({1, 2, 2, 3}, {1, 2, 3, 4});
  EXPECT_GT(r, 0.9);
  EXPECT_LT(r, 1.0);
}
