#include <gtest/gtest.h>

#include <random>

#include "holmc/errors.hpp"
#include "holmc/potentials.hpp"

using namespace holmc;

namespace {

struct Instance {
  Matrix X;
  Vector y, theta, v;
};

Instance logistic_instance(int n, int d, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Instance I;
  I.X.resize(n, d);
  I.y.resize(n);
  I.theta.resize(d);
  I.v.resize(d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) I.X(i, j) = nd(rng) / std::sqrt(d);
    I.y(i) = nd(rng) > 0 ? 1.0 : 0.0;
  }
  for (int j = 0; j < d; ++j) {
    I.theta(j) = nd(rng);
    I.v(j) = nd(rng);
  }
  I.v.normalize();
  return I;
}

Vector fd_gradient(const PotentialModel& U, const Vector& theta, double h = 1e-5) {
  Vector g(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    Vector a = theta, b = theta;
    a(i) += h;
    b(i) -= h;
    g(i) = (U.value(a) - U.value(b)) / (2 * h);
  }
  return g;
}

}  // namespace

TEST(Quadratic, FromDatasetExamples) {
  const auto q0 = quadratic_from_dataset(Matrix::Zero(3, 2), Vector::Ones(3), 2.0);
  EXPECT_LT((q0.A() - 2 * Matrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_LT(q0.b().norm(), 1e-15);
  const auto q1 = quadratic_from_dataset(Matrix::Identity(2, 2), Vector::Ones(2), 1.0);
  EXPECT_LT((q1.A() - 1.5 * Matrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_LT((q1.b() - 0.5 * Vector::Ones(2)).norm(), 1e-15);
  EXPECT_EQ(q1.provenance(), Provenance::FromDataset);
  const auto [m, L] = q1.hessian_bounds();
  EXPECT_NEAR(m, 1.5, 1e-14);
  EXPECT_NEAR(L, 1.5, 1e-14);
}

TEST(Quadratic, EmptyDataset) {
  try {
    quadratic_from_dataset(Matrix(0, 2), Vector(0), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyDataset);
  }
}

TEST(Quadratic, GradientMatchesFiniteDifferences) {
  const auto I = logistic_instance(30, 4, 3);
  const Vector y = I.X * Vector::Ones(4);
  const auto q = quadratic_from_dataset(I.X, y, 0.5);
  const Vector g = q.gradient(I.theta);
  EXPECT_LE((g - fd_gradient(q, I.theta)).norm() / g.norm(), 1e-6);
}

TEST(Quadratic, TaylorSurrogateIsExact) {
  const auto I = logistic_instance(20, 3, 4);
  const auto q = quadratic_from_dataset(I.X, I.X * I.theta, 1.0);
  const Vector x = 2 * I.v;
  for (const Vector& center : {Vector(Vector::Zero(3)), I.theta})
    EXPECT_LT((q.evaluate_taylor_at(center, x) - q.gradient(x)).norm(), 1e-12);
  const auto tl = q.taylor_line(I.theta, I.v);
  EXPECT_LT((tl.coef[1] - q.A() * I.v).norm(), 1e-14);
  EXPECT_LT(tl.coef[2].norm(), 1e-15);
  EXPECT_LT(tl.coef[3].norm(), 1e-15);
}

TEST(Logistic, GradientExamples) {
  const auto I = logistic_instance(25, 3, 5);
  const LogisticPotential pot(I.X, I.y, 0.7);
  const Vector g0 = logistic_gradient(pot, Vector::Zero(3));
  EXPECT_LT((g0 - I.X.transpose() * (0.5 * Vector::Ones(25) - I.y)).norm(), 1e-14);
  const LogisticPotential ridge_only(Matrix(0, 3), Vector(0), 0.7);
  EXPECT_LT((logistic_gradient(ridge_only, I.theta) - 0.7 * I.theta).norm(), 1e-15);
  const Vector g = logistic_gradient(pot, I.theta);
  EXPECT_LE((g - fd_gradient(pot, I.theta)).norm() / g.norm(), 1e-5);
}

TEST(Logistic, SigmoidSaturatesGracefully) {
  EXPECT_EQ(sigmoid(0.0), 0.5);
  EXPECT_EQ(sigmoid(1e6), 1.0);
  EXPECT_EQ(sigmoid(-1e6), sigmoid(-500.0));
  EXPECT_GT(sigmoid(-1e6), 0.0);
  EXPECT_NEAR(sigmoid(-30.0), std::exp(-30.0) / (1 + std::exp(-30.0)), 1e-28);
}

TEST(Logistic, NonBinaryTargetRejected) {
  Matrix X = Matrix::Ones(2, 1);
  Vector y(2);
  y << 0.0, 2.0;
  try {
    LogisticPotential p(X, y, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonBinaryTarget);
  }
}

TEST(Logistic, TaylorLineMatchesRichardsonDifferences) {
  for (unsigned s = 0; s < 3; ++s) {
    const auto I = logistic_instance(50, 5, 40 + s);
    const LogisticPotential pot(I.X, I.y, 1.3);
    const auto tl = logistic_taylor_line(pot, I.theta, I.v);
    auto w = [&](double t) { return pot.gradient(I.theta + t * I.v); };
    auto d1 = [&](double h) { return Vector((w(h) - w(-h)) / (2 * h)); };
    auto d2 = [&](double h) { return Vector((w(h) - 2 * w(0) + w(-h)) / (h * h)); };
    auto d3 = [&](double h) { return Vector((w(2 * h) - 2 * w(h) + 2 * w(-h) - w(-2 * h)) / (2 * h * h * h)); };
    const Vector r1 = (4 * d1(1e-3) - d1(2e-3)) / 3;
    const Vector r2 = (4 * d2(1e-3) - d2(2e-3)) / 3;
    const Vector r3 = (4 * d3(1e-2) - d3(2e-2)) / 3;
    EXPECT_LT((tl.coef[0] - w(0)).norm(), 1e-13 * w(0).norm());
    EXPECT_LE((tl.coef[1] - r1).norm() / r1.norm(), 1e-5);
    EXPECT_LE((2 * tl.coef[2] - r2).norm() / r2.norm(), 1e-5);
    EXPECT_LE((6 * tl.coef[3] - r3).norm() / r3.norm(), 1e-5);
  }
}

TEST(Logistic, ZeroDirectionLeavesConstantOnly) {
  const auto I = logistic_instance(10, 2, 6);
  const LogisticPotential pot(I.X, I.y, 0.3);
  const auto tl = pot.taylor_line(I.theta, Vector::Zero(2));
  EXPECT_LT((tl.coef[0] - pot.gradient(I.theta)).norm(), 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_EQ(tl.coef[k].norm(), 0.0);
}

TEST(Logistic, DegreeOtherThanThreeUnsupported) {
  const auto I = logistic_instance(10, 2, 7);
  const LogisticPotential pot(I.X, I.y, 0.3);
  try {
    pot.taylor_line(I.theta, I.v, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeUnsupported);
  }
}

TEST(Logistic, LineRemainderIsFourthOrder) {
  const auto I = logistic_instance(40, 4, 8);
  const LogisticPotential pot(I.X, I.y, 0.5);
  const auto tl = pot.taylor_line(I.theta, I.v);
  auto err = [&](double t) { return (tl.evaluate(t) - pot.gradient(I.theta + t * I.v)).norm(); };
  for (double t : {1e-1, 5e-2, 2e-2}) {
    const double p = std::log2(err(t) / err(t / 2));
    EXPECT_NEAR(p, 4.0, 0.5) << "t=" << t;
  }
}

TEST(Logistic, CurvatureBoundsHoldOnRayleighQuotients) {
  const auto I = logistic_instance(60, 4, 9);
  const LogisticPotential pot(I.X, I.y, 0.8);
  const auto [m, L] = pot.hessian_bounds();
  EXPECT_DOUBLE_EQ(m, 0.8);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 50; ++k) {
    Vector th(4), u(4);
    for (int j = 0; j < 4; ++j) {
      th(j) = 3 * nd(rng);
      u(j) = nd(rng);
    }
    const double rq = u.dot(pot.hessian(th) * u) / u.squaredNorm();
    EXPECT_GE(rq, m - 1e-8);
    EXPECT_LE(rq, L + 1e-8);
  }
}
