#include <gtest/gtest.h>

#include <random>

#include "holmc/errors.hpp"
#include "holmc/kernel4.hpp"
#include "holmc/kernel_general.hpp"
#include "printed_forms.hpp"

using namespace holmc;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 r(12345);
  return r;
}

Vector randn(Eigen::Index n) {
  std::normal_distribution<double> nd;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = nd(rng());
  return v;
}

Matrix random_spd(int d) {
  Matrix G(d, d);
  for (int i = 0; i < d; ++i) G.row(i) = randn(d).transpose();
  return G * G.transpose() / d + 0.3 * Matrix::Identity(d, d);
}

Vector mu_action(const MuTable& mu, const Vector& x) {
  const Eigen::Index d = x.size() / 4;
  Vector out = Vector::Zero(x.size());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.segment(i * d, d) += mu(i, j) * x.segment(j * d, d);
  return out;
}

class Opaque final : public PotentialModel {
 public:
  std::string kind() const override { return "opaque"; }
  int dim() const override { return 1; }
  double value(const Vector& t) const override { return t.squaredNorm(); }
  Vector gradient(const Vector& t) const override { return 2 * t; }
  Matrix hessian(const Vector&) const override { return 2 * Matrix::Identity(1, 1); }
  std::pair<double, double> hessian_bounds() const override { return {2, 2}; }
  TaylorLine taylor_line(const Vector& t, const Vector& v, int) const override {
    TaylorLine tl;
    tl.coef = {2 * t, 2 * v, Vector::Zero(1), Vector::Zero(1)};
    return tl;
  }
  LineExpansion line_expansion(const Vector&, const Vector&) const override { return {}; }
};

}  // namespace

TEST(Mu, ZeroStepIsIdentity) {
  EXPECT_LT((mu_coefficients(1.3, 0.0) - MuTable::Identity()).norm(), 1e-15);
  EXPECT_LT(sigma_entries(1.3, 0.0).norm(), 1e-300);
}

TEST(Mu, StructuralZeros) {
  const auto mu = mu_coefficients(2.0, 0.3);
  EXPECT_EQ(mu(0, 0), 1.0);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(mu(i, 0), 0.0);
}

TEST(Mu, LeadingBehaviourOfMu01) {
  for (double g : {0.5, 2.0}) {
    const double eta = 1e-3;
    const double c3 = (mu_coefficients(g, eta)(0, 1) - eta) / (eta * eta * eta);
    EXPECT_NEAR(c3, -g * g / 6, 1e-2 * g * g);
  }
}

TEST(Mu, FirstOrderExpansions) {
  const double g = 1.7;
  for (double eta : {1e-3, 1e-4}) {
    const auto mu = mu_coefficients(g, eta);
    EXPECT_NEAR(mu(1, 2), g * eta, 5 * eta * eta * g * g);
    EXPECT_NEAR(mu(2, 1), -g * eta, 5 * eta * eta * g * g);
    EXPECT_NEAR(mu(3, 3), 1 - g * eta, 5 * eta * eta * g * g);
  }
}

TEST(Mu, MatchesPrintedTranscription) {
  for (auto [g, eta] : {std::pair{1.0, 0.5}, {2.0, 0.3}, {0.5, 2.0}, {5.0, 0.1}, {1.0, 3.0}, {1.0, 0.1}}) {
    const MuTable ours = mu_coefficients(g, eta);
    const Eigen::Matrix4d ref = printed::mu(g, eta);
    EXPECT_LE((ours - ref).norm() / ref.norm(), 1e-10) << "gamma=" << g << " eta=" << eta;
  }
}

TEST(Sigma, MatchesPrintedTranscriptionOnLeadingBlock) {
  for (auto [g, eta] : {std::pair{1.0, 0.5}, {2.0, 0.3}, {0.5, 2.0}, {5.0, 0.1}, {1.0, 3.0}}) {
    const Matrix ours = sigma_entries(g, eta).topLeftCorner(3, 3);
    const Matrix ref = printed::sigma(g, eta).topLeftCorner(3, 3);
    EXPECT_LE((ours - ref).norm() / ref.norm(), 1e-8) << "gamma=" << g << " eta=" << eta;
  }
}

TEST(Sigma, ItoIsometryQuadrature) {
  const double g = 1.0, eta = 0.1;
  const auto [u, w] = gauss_legendre(200, 0.0, eta);
  Eigen::Matrix4d ref = Eigen::Matrix4d::Zero();
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Vector K = stage_kernels(4, g, u[k]);
    ref += w[k] * K * K.transpose();
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(ito_kernel(i, g, u[k]), K(i), 1e-13);
  }
  EXPECT_LE((sigma_entries(g, eta) - ref).norm() / ref.norm(), 1e-10);
}

TEST(Sigma, SymmetricAndPsdOnGrid) {
  for (double g : {0.5, 1.0, 2.0, 5.0})
    for (double eta : {0.005, 0.011, 0.05, 0.1}) {
      const SigmaTable s = sigma_entries(g, eta);
      EXPECT_EQ((s - s.transpose()).norm(), 0.0);
      EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(s).eigenvalues().minCoeff(), -1e-12);
    }
}

TEST(MeanQuadratic, GradientFreeReducesToMuAction) {
  const Vector x = randn(8);
  const auto k = kernel4_coefficients(1.0, 0.1);
  EXPECT_LT((mean_quadratic(k, x, Matrix::Zero(2, 2), Vector::Zero(2)) - mu_action(k.mu, x)).norm(), 1e-14);
}

TEST(MeanQuadratic, MatchesStackedOracle) {
  for (int d = 1; d <= 3; ++d)
    for (double g : {0.5, 5.0}) {
      const Matrix A = random_spd(d);
      const Vector b = randn(d), x = randn(4 * d);
      const auto t = transition_quadratic(4, g, 0.05, A, b);
      const Vector ref = t.T * x + t.c;
      EXPECT_LE((mean_quadratic(x, A, b, g, 0.05) - ref).norm() / ref.norm(), 1e-10);
    }
}

TEST(MeanQuadratic, ScalarCaseMatchesQuadrature) {
  Matrix A(1, 1);
  A << 1.7;
  const Vector b = Vector::Zero(1);
  const QuadraticPotential q(A, b);
  const Vector x = randn(4);
  const auto gm = mean_general(4, 1.0, 0.1, x, q, 3, CenterPolicy::Exact);
  EXPECT_LE((mean_quadratic(x, A, b, 1.0, 0.1) - gm.mean).norm() / gm.mean.norm(), 1e-9);
}

TEST(MeanQuadratic, IsAffine) {
  const Matrix A = random_spd(3);
  const Vector b = randn(3), delta = randn(12);
  const auto k = kernel4_coefficients(2.0, 0.05);
  const Vector x1 = randn(12), x2 = randn(12);
  const Vector e1 = mean_quadratic(k, x1 + delta, A, b) - mean_quadratic(k, x1, A, b);
  const Vector e2 = mean_quadratic(k, x2 + delta, A, b) - mean_quadratic(k, x2, A, b);
  EXPECT_LT((e1 - e2).norm(), 1e-12);
  const auto am = affine_quadratic(k, A, b);
  EXPECT_LT((am.T * x1 + am.c - mean_quadratic(k, x1, A, b)).norm(), 1e-13);
}

TEST(MeanLogistic, MatchesLineQuadrature) {
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < 2; ++s) {
    Matrix X(30, 3);
    Vector y(30);
    for (int i = 0; i < 30; ++i) {
      X.row(i) = randn(3).transpose() / std::sqrt(3.0);
      y(i) = coin(rng()) ? 1.0 : 0.0;
    }
    const LogisticPotential pot(X, y, 0.9);
    const Vector x = randn(12);
    const Vector ours = mean_logistic(x, pot, 1.0, 0.05);
    const auto ref = mean_general(4, 1.0, 0.05, x, pot, 3, CenterPolicy::Line);
    EXPECT_LE((ours - ref.mean).norm() / ref.mean.norm(), 1e-6);
  }
}

TEST(MeanLogistic, ZeroVelocityAndVanishingData) {
  Matrix X = Matrix::Zero(4, 2);
  Vector y(4);
  y << 0, 1, 0, 1;
  const LogisticPotential pot(X, y, 1e-12);
  const Vector x = randn(8);
  const auto k = kernel4_coefficients(1.0, 0.1);
  EXPECT_LT((mean_logistic(k, x, pot) - mu_action(k.mu, x)).norm(), 1e-10);
  Vector x0 = randn(8);
  x0.segment(2, 2).setZero();
  const auto D = pot.data_derivatives(x0.head(2), x0.segment(2, 2));
  for (int j = 1; j < 4; ++j) EXPECT_EQ(D[j].norm(), 0.0);
}

TEST(StepLaw, DispatchAndErrors) {
  Matrix A(1, 1);
  A << 1.0;
  const QuadraticPotential q(A, Vector::Ones(1));
  const Vector x = randn(4);
  const auto law = step_law(x, q, 1.0, 1e-10);
  EXPECT_LT((law.mean - x).norm(), 1e-8);
  EXPECT_LT(law.covariance().norm(), 1e-9);
  try {
    step_law(x, Opaque{}, 1.0, 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedPotential);
  }
}
