#include <gtest/gtest.h>

#include <random>

#include "holmc/errors.hpp"
#include "holmc/kernel4.hpp"
#include "holmc/kernel_general.hpp"

using namespace holmc;

namespace {

Vector randn(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 r(seed);
  std::normal_distribution<double> nd;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = nd(r);
  return v;
}

Matrix spd(int d, std::uint64_t seed) {
  const Vector g = randn(d * d, seed);
  const Matrix G = Eigen::Map<const Matrix>(g.data(), d, d);
  return G * G.transpose() / d + 0.5 * Matrix::Identity(d, d);
}

}  // namespace

TEST(Stacked, DimensionAndNoiseLayout) {
  for (int P = 3; P <= 6; ++P)
    for (int d = 1; d <= 3; ++d) {
      const auto sys = build_stacked_system(P, 1.5, d);
      EXPECT_EQ(sys.N, (P - 1) * P * d + P * d + 1);
      EXPECT_EQ(sys.G.rows(), sys.N);
      EXPECT_EQ(sys.S.cols(), d);
      // Only the last velocity block of each stage copy receives noise.
      for (int copy = 0; copy < P; ++copy)
        for (int comp = 0; comp < P; ++comp) {
          const double nrm = sys.S.middleRows(sys.index(copy, comp), d).norm();
          if (copy >= 1 && comp == P - 1)
            EXPECT_NEAR(nrm, std::sqrt(2 * 1.5 * d), 1e-14);
          else
            EXPECT_EQ(nrm, 0.0);
        }
      // The frozen copy and the constant slot do not move.
      EXPECT_EQ(sys.G.topRows(P * d).norm(), 0.0);
      EXPECT_EQ(sys.G.row(sys.const_index()).norm(), 0.0);
    }
}

TEST(Stacked, RejectsBadArguments) {
  EXPECT_THROW(build_stacked_system(2, 1.0, 1), Error);
  EXPECT_THROW(build_stacked_system(4, 0.0, 1), Error);
  EXPECT_THROW(build_stacked_system(4, 1.0, Matrix::Identity(2, 2), Vector::Zero(3)), Error);
}

TEST(Transition, ZeroStepIsIdentity) {
  const Matrix A = spd(2, 1);
  for (int P = 3; P <= 6; ++P) {
    const auto k = transition_quadratic(P, 1.0, 0.0, A, Vector::Ones(2));
    EXPECT_LT((k.T - Matrix::Identity(2 * P, 2 * P)).norm(), 1e-14);
    EXPECT_LT(k.c.norm(), 1e-14);
    EXPECT_LT(k.Sigma.norm(), 1e-14);
  }
}

TEST(Transition, CovarianceDoesNotDependOnPotential) {
  for (int P = 3; P <= 6; ++P) {
    const auto k0 = transition_quadratic(P, 2.0, 0.05, Matrix::Zero(2, 2), Vector::Zero(2));
    const auto k1 = transition_quadratic(P, 2.0, 0.05, spd(2, 7), randn(2, 8));
    EXPECT_LE((k0.Sigma - k1.Sigma).norm(), 1e-12 * k0.Sigma.norm());
    EXPECT_LE((k0.Sigma - kron_identity(covariance_universal(P, 2.0, 0.05), 2)).norm(),
              1e-12 * k0.Sigma.norm());
  }
}

TEST(Transition, DecoupledMatchesStacked) {
  for (int P = 3; P <= 6; ++P)
    for (int d = 1; d <= 3; ++d) {
      const Matrix A = spd(d, 10 + d);
      const Vector b = randn(d, 20 + d);
      const auto full = transition_quadratic(P, 1.0, 0.05, A, b);
      const auto dec = transition_quadratic_decoupled(P, 1.0, 0.05, A, b);
      EXPECT_LE((full.T - dec.T).norm(), 1e-10 * full.T.norm());
      EXPECT_LE((full.c - dec.c).norm(), 1e-10 * (1 + full.c.norm()));
      EXPECT_LE((full.Sigma - dec.Sigma).norm(), 1e-10 * full.Sigma.norm());
    }
}

TEST(Transition, UniversalCovarianceMatchesFourthOrderTable) {
  for (double g : {0.5, 1.0, 5.0})
    for (double eta : {0.011, 0.1}) {
      const Matrix u = covariance_universal(4, g, eta);
      EXPECT_LE((u - Matrix(sigma_entries(g, eta))).norm(), 1e-8 * u.norm());
    }
}

TEST(Transition, SigmaIsPsd) {
  for (int P = 3; P <= 6; ++P) {
    const Matrix s = covariance_universal(P, 1.0, 0.011);
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix>(s).eigenvalues().minCoeff(), -1e-14);
  }
}

TEST(MeanGeneral, ExactPolicyMatchesTransitionForQuadratic) {
  for (int P = 3; P <= 6; ++P) {
    const Matrix A = spd(2, 30 + P);
    const Vector b = randn(2, 40 + P), x = randn(2 * P, 50 + P);
    const auto k = transition_quadratic(P, 1.0, 0.05, A, b);
    const Vector ref = k.T * x + k.c;
    const QuadraticPotential q(A, b);
    for (auto policy : {CenterPolicy::Exact, CenterPolicy::CurrentIterate, CenterPolicy::Line}) {
      const auto gm = mean_general(P, 1.0, 0.05, x, q, 3, policy);
      EXPECT_LE((gm.mean - ref).norm() / ref.norm(), 1e-7) << "P=" << P;
    }
  }
}

TEST(MeanGeneral, LogisticLineMatchesFourthOrderClosedForm) {
  const Matrix X = Eigen::Map<const Matrix>(randn(40 * 2, 77).data(), 40, 2) / 2.0;
  Vector y(40);
  for (int i = 0; i < 40; ++i) y(i) = X(i, 0) + 0.3 * X(i, 1) > 0 ? 1.0 : 0.0;
  const LogisticPotential pot(X, y, 1.0);
  const Vector x = randn(8, 78);
  const auto gm = mean_general(4, 1.0, 0.05, x, pot, 3, CenterPolicy::Line);
  EXPECT_LE((gm.mean - mean_logistic(x, pot, 1.0, 0.05)).norm() / gm.mean.norm(), 1e-6);
  EXPECT_FALSE(gm.accuracy_warning);
}

TEST(MeanGeneral, CenterPolicyParsing) {
  EXPECT_EQ(parse_center_policy("line"), CenterPolicy::Line);
  EXPECT_THROW(parse_center_policy("sideways"), Error);
}

TEST(StageDifferences, ExponentsGrowWithStage) {
  const int P = 5;
  Matrix A(1, 1);
  A << 1.0;
  const QuadraticPotential q(A, Vector::Ones(1));
  const Vector x = randn(P, 91);
  const auto rows = stage_difference_orders(P, 1.0, {0.01, 0.02, 0.05, 0.1}, q, x);
  ASSERT_FALSE(rows.empty());
  double st2_theta = 0, st3_theta = 0;
  for (const auto& r : rows) {
    if (r.component == 0 && r.stage == 2) st2_theta = r.exponent;
    if (r.component == 0 && r.stage == 3) st3_theta = r.exponent;
  }
  EXPECT_GT(st2_theta, 3.5);
  EXPECT_GT(st3_theta, st2_theta + 2.0);
}
