#include "holmc/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "holmc/errors.hpp"

namespace holmc {

namespace {

bool all_finite(const Matrix& M) { return M.allFinite(); }

void require_square(const Matrix& M, const char* who) {
  if (M.rows() != M.cols())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(who) + ": expected a square matrix, got " + std::to_string(M.rows()) +
                    "x" + std::to_string(M.cols()));
}

// Padé coefficients and switch thresholds (Higham 2005).
constexpr std::array<double, 4> kB3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kB5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kB7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                       25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kB9 = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                        30270240.0,    2162160.0,    110880.0,     3960.0,
                                        90.0,          1.0};
constexpr std::array<double, 14> kB13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068;
constexpr double kTheta13 = 5.371920351148152;

template <std::size_t N>
Matrix pade_low(const Matrix& A, const std::array<double, N>& b) {
  const Eigen::Index n = A.rows();
  const Matrix I = Matrix::Identity(n, n);
  const Matrix A2 = A * A;
  Matrix U = b[1] * I;
  Matrix V = b[0] * I;
  Matrix Ak = I;
  for (std::size_t k = 2; k < N; k += 2) {
    Ak = Ak * A2;
    V += b[k] * Ak;
    if (k + 1 < N) U += b[k + 1] * Ak;
  }
  U = A * U;
  return (V - U).partialPivLu().solve(V + U);
}

Matrix pade13(const Matrix& A) {
  const auto& b = kB13;
  const Eigen::Index n = A.rows();
  const Matrix I = Matrix::Identity(n, n);
  const Matrix A2 = A * A;
  const Matrix A4 = A2 * A2;
  const Matrix A6 = A4 * A2;
  Matrix U = A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 +
                  b[3] * A2 + b[1] * I);
  Matrix V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 +
             b[0] * I;
  return (V - U).partialPivLu().solve(V + U);
}

}  // namespace

CholeskyResult cholesky_with_jitter(const Matrix& M, double jitter0) {
  require_square(M, "cholesky_with_jitter");
  if (!all_finite(M)) throw Error(ErrorKind::NotFactorizable, "non-finite entries");
  const Eigen::Index n = M.rows();
  const Matrix S = sym(M);
  double delta = 0.0;
  while (true) {
    Eigen::LLT<Matrix> llt(S + delta * Matrix::Identity(n, n));
    if (llt.info() == Eigen::Success) {
      Matrix L = llt.matrixL();
      if (L.allFinite()) return {std::move(L), delta};
    }
    if (delta >= tol::kJitterMax * (1.0 - 1e-12))
      throw Error(ErrorKind::NotFactorizable,
                  "Cholesky failed with jitter up to " + std::to_string(tol::kJitterMax));
    delta = (delta == 0.0) ? jitter0 : std::min(10.0 * delta, tol::kJitterMax);
  }
}

Matrix sqrtm_spd(const Matrix& M) {
  require_square(M, "sqrtm_spd");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym(M));
  const Vector& w = es.eigenvalues();
  const double scale = std::max(w.cwiseAbs().maxCoeff(), 0.0);
  if (w.size() > 0 && w.minCoeff() < -tol::kPsdBand * scale)
    throw Error(ErrorKind::NotPSD, "lambda_min = " + std::to_string(w.minCoeff()));
  const Vector r = w.cwiseMax(0.0).cwiseSqrt();
  return sym(es.eigenvectors() * r.asDiagonal() * es.eigenvectors().transpose());
}

Matrix expm(const Matrix& G) {
  require_square(G, "expm");
  if (!all_finite(G)) throw Error(ErrorKind::Overflow, "expm: non-finite input");
  const Eigen::Index n = G.rows();
  if (n == 0) return G;
  const double norm1 = G.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 <= kTheta3) return pade_low(G, kB3);
  if (norm1 <= kTheta5) return pade_low(G, kB5);
  if (norm1 <= kTheta7) return pade_low(G, kB7);
  if (norm1 <= kTheta9) return pade_low(G, kB9);
  int s = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / kTheta13))));
  if (s > 1000) throw Error(ErrorKind::Overflow, "expm: norm too large");
  Matrix E = pade13(G / std::ldexp(1.0, s));
  for (int k = 0; k < s; ++k) E = E * E;
  if (!E.allFinite()) throw Error(ErrorKind::Overflow, "expm: result overflowed");
  return E;
}

ExpmGramian expm_with_gramian(const Matrix& G, const Matrix& Q, double t) {
  require_square(G, "van_loan_gramian");
  if (Q.rows() != G.rows() || Q.cols() != G.cols())
    throw Error(ErrorKind::DimensionMismatch, "van_loan_gramian: Q must match G");
  const Eigen::Index n = G.rows();
  Matrix V = Matrix::Zero(2 * n, 2 * n);
  V.topLeftCorner(n, n) = -G;
  V.topRightCorner(n, n) = Q;
  V.bottomRightCorner(n, n) = G.transpose();
  const Matrix E = expm(V * t);
  ExpmGramian out;
  out.phi = E.bottomRightCorner(n, n).transpose();
  out.gramian = sym(out.phi * E.topRightCorner(n, n));
  return out;
}

Matrix van_loan_gramian(const Matrix& G, const Matrix& Q, double t) {
  return expm_with_gramian(G, Q, t).gramian;
}

double spectral_radius(const Matrix& T) {
  require_square(T, "spectral_radius");
  if (T.rows() == 0) return 0.0;
  Eigen::EigenSolver<Matrix> es(T, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix solve_discrete_lyapunov(const Matrix& T, const Matrix& Q) {
  require_square(T, "solve_discrete_lyapunov");
  if (Q.rows() != T.rows() || Q.cols() != T.cols())
    throw Error(ErrorKind::DimensionMismatch, "solve_discrete_lyapunov: Q must match T");
  const double rho = spectral_radius(T);
  if (!(rho < 1.0 - tol::kContractiveMargin))
    throw Error(ErrorKind::NotContractive, "spectral radius " + std::to_string(rho));
  Matrix S = sym(Q);
  Matrix A = T;
  const double qn = std::max(Q.norm(), 1e-300);
  for (int it = 0; it < 200; ++it) {
    const Matrix inc = A * S * A.transpose();
    S += inc;
    A = A * A;
    if (inc.norm() <= 1e-17 * qn || A.norm() < 1e-300) break;
  }
  S = sym(S);
  // One residual-correction pass tightens the fixed point after the doubling sum.
  const Matrix R = S - T * S * T.transpose() - Q;
  if (R.norm() > 1e-12 * qn) {
    Matrix D = -R;
    Matrix B = T;
    Matrix corr = D;
    for (int it = 0; it < 200; ++it) {
      const Matrix inc = B * corr * B.transpose();
      corr += inc;
      B = B * B;
      if (inc.norm() <= 1e-17 * std::max(D.norm(), 1e-300)) break;
    }
    S = sym(S + corr);
  }
  return S;
}

ComplexEigenDecomposition eigen_decompose(const Matrix& B) {
  require_square(B, "eigen_decompose");
  Eigen::ComplexEigenSolver<CMatrix> es(B.cast<std::complex<double>>(), true);
  ComplexEigenDecomposition out;
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
  for (Eigen::Index j = 0; j < out.eigenvectors.cols(); ++j)
    out.eigenvectors.col(j).normalize();
  Eigen::JacobiSVD<CMatrix> svd(out.eigenvectors);
  const auto& sv = svd.singularValues();
  out.condition_estimate = sv.size() ? sv(0) / std::max(sv(sv.size() - 1), 1e-300) : 0.0;
  return out;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "gauss_legendre: n must be positive");
  std::vector<double> x(n), w(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = mid - half * z;
    x[n - 1 - i] = mid + half * z;
    w[i] = w[n - 1 - i] = 2.0 * half / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

Matrix kron_identity(const Matrix& A, int d) {
  Matrix K = Matrix::Zero(A.rows() * d, A.cols() * d);
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0.0) K.block(i * d, j * d, d, d).diagonal().setConstant(A(i, j));
  return K;
}

}  // namespace holmc
