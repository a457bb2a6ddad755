#include <gtest/gtest.h>

#include <random>

#include "holmc/certificate.hpp"
#include "holmc/errors.hpp"

using namespace holmc;

namespace {

Matrix hessian_in(int d, double m, double L, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(m, L);
  Matrix G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = nd(rng);
  Eigen::HouseholderQR<Matrix> qr(G);
  const Matrix Q = qr.householderQ();
  Vector s(d);
  for (int i = 0; i < d; ++i) s(i) = ud(rng);
  s(0) = m;
  if (d > 1) s(d - 1) = L;
  return sym(Q * s.asDiagonal() * Q.transpose());
}

}  // namespace

TEST(Bsim, Structure) {
  Matrix B3(2, 2);
  B3 << 0, -1, 1, 1;
  EXPECT_EQ(build_bsim(3), B3);
  Matrix B4(3, 3);
  B4 << 0, -1, 0, 1, 0, -1, 0, 1, 1;
  EXPECT_EQ(build_bsim(4), B4);
  const Matrix B5 = build_bsim(5);
  EXPECT_EQ(B5.rows(), 4);
  EXPECT_EQ(B5(3, 3), 1.0);
  EXPECT_EQ(B5(2, 3), -1.0);
  EXPECT_EQ(B5(3, 2), 1.0);
  EXPECT_THROW(build_bsim(2), Error);
}

TEST(Bsim, Spectrum) {
  const auto s3 = spectrum_bsim(3);
  EXPECT_NEAR(s3.lambda_hat, 0.5, 1e-12);
  EXPECT_NEAR(std::abs(s3.eigenvalues(0).imag()), std::sqrt(3.0) / 2, 1e-12);
  const auto s4 = spectrum_bsim(4);
  EXPECT_NEAR(s4.lambda_hat, 0.215, 5e-4);
  EXPECT_NEAR(std::abs(s4.eigenvalues(0).imag()), 1.307, 5e-4);
  EXPECT_NEAR(s4.eigenvalues(2).real(), 0.570, 5e-4);
  for (int P = 3; P <= 8; ++P)
    for (Eigen::Index i = 0; i < P - 1; ++i) EXPECT_GT(spectrum_bsim(P).eigenvalues(i).real(), 0.0);
}

TEST(ComputeH, SymmetricPositiveAndContracting) {
  for (int P = 3; P <= 8; ++P) {
    const auto h = compute_H(P);
    EXPECT_TRUE(h.diagonalizable);
    EXPECT_LT((h.H - h.H.transpose()).norm(), 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.H);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
    const Matrix B = build_bsim(P);
    const double lam = spectrum_bsim(P).lambda_hat;
    const Matrix S = h.H * B + B.transpose() * h.H - 2 * lam * h.H;
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix>(sym(S)).eigenvalues().minCoeff(), -1e-8 * h.H.norm());
    // κ_LMI ≥ κ_theory
    const Matrix Hm = es.operatorInverseSqrt();
    const double k_lmi =
        Eigen::SelfAdjointEigenSolver<Matrix>(sym(Hm * (h.H * B + B.transpose() * h.H) * Hm)).eigenvalues().minCoeff() / 2;
    EXPECT_GE(k_lmi, lam - 1e-8);
  }
}

TEST(ComputeH, PThreeFromConjugatePair) {
  const auto h = compute_H(3);
  EXPECT_EQ(h.H.rows(), 2);
  EXPECT_NEAR(h.H(1, 1), 2.0, 1e-12);  // two eigenvectors each with last component 1
}

TEST(HConstants, DefinitionsAndConventions) {
  const auto h = compute_H(4);
  const auto th = compute_h_constants(h, 4, KappaConvention::Theory);
  const auto ex = compute_h_constants(h, 4, KappaConvention::ExampleCompat);
  EXPECT_EQ(th.h2, 1.0);
  EXPECT_EQ(th.h3, 1.0);
  const double lmin = Eigen::SelfAdjointEigenSolver<Matrix>(h.H).eigenvalues().minCoeff();
  EXPECT_NEAR(th.h4, 2.5 / lmin, 1e-12);
  EXPECT_NEAR(th.h5, 5.0 / lmin, 1e-12);
  EXPECT_NEAR(th.kappa, spectrum_bsim(4).lambda_hat, 1e-12);
  EXPECT_NEAR(ex.kappa, lmin, 1e-12);
}

TEST(GammaZero, FormulaAndMonotonicity) {
  EXPECT_NEAR(gamma_zero(1, 1, 1, 1, 1, 1), 2.0, 1e-15);
  double prev = 0;
  for (double L : {0.5, 1.0, 2.0, 4.0}) {
    const double g = gamma_zero(L, 3.3, 1, 2.7, 5.4, 0.215);
    EXPECT_GT(g, prev);
    prev = g;
  }
}

TEST(Certificate, AssembledFields) {
  const auto c = build_certificate({4, 0.5, 2.0, std::nullopt, 0.5, KappaConvention::Theory});
  EXPECT_EQ(c.gamma, c.gamma0);
  EXPECT_LT((c.M_sim - c.M_sim.transpose()).norm(), 1e-15);
  EXPECT_GT(c.lambda_min_M, 0.0);
  EXPECT_LE(c.lambda_min_M, c.lambda_max_M);
  EXPECT_DOUBLE_EQ(c.rho, std::min(c.m / (3 * c.h3 * c.gamma), c.gamma * c.kappa / 6));
  EXPECT_GT(c.eta_star, 0.0);
  EXPECT_NEAR(c.M_sim(0, 1), 1.0 / c.gamma, 1e-15);
}

TEST(Certificate, FrictionTooSmall) {
  try {
    build_certificate({4, 0.5, 2.0, 1.0, 0.5, KappaConvention::Theory});
    FAIL() << "expected FrictionTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FrictionTooSmall);
  }
}

TEST(Certificate, LmiFeasibleAtTwiceGammaZero) {
  for (int P : {3, 4, 5}) {
    const auto c0 = build_certificate({P, 0.5, 1.0, std::nullopt, 0.5, KappaConvention::Theory});
    const auto c = build_certificate({P, 0.5, 1.0, 2 * c0.gamma0, 0.5, KappaConvention::Theory});
    for (int d = 1; d <= 3; ++d) {
      const auto r = verify_contraction_lmi(c, hessian_in(d, 0.5, 1.0, 100 + d));
      EXPECT_TRUE(r.feasible) << "P=" << P << " d=" << d << " max=" << r.max_eigenvalue;
    }
    // ρ = 0 variant
    auto c_norho = c;
    c_norho.rho = 0;
    EXPECT_LE(verify_contraction_lmi(c_norho, hessian_in(2, 0.5, 1.0, 9)).max_eigenvalue,
              1e-8 * c.lambda_max_M);
  }
}

TEST(Certificate, IndependentOfDimension) {
  const auto a = build_certificate({5, 0.3, 3.0, std::nullopt, 0.5, KappaConvention::Theory});
  const auto b = build_certificate({5, 0.3, 3.0, std::nullopt, 0.5, KappaConvention::Theory});
  EXPECT_EQ(a.M_sim, b.M_sim);
  EXPECT_EQ(a.eta_star, b.eta_star);
}
