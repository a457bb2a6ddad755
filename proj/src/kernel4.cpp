#include "holmc/kernel4.hpp"

#include <cmath>

#include "holmc/detail/kernel4_tables.hpp"
#include "holmc/errors.hpp"

namespace holmc {

namespace {

using detail::kSeriesSwitch;

void check_step(double gamma, double eta) {
  if (!(gamma > 0) || !(eta >= 0))
    throw Error(ErrorKind::InvalidArgument, "kernel4 requires gamma > 0 and eta >= 0");
}

}  // namespace

MuTable mu_coefficients(double gamma, double eta) {
  check_step(gamma, eta);
  MuTable mu;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mu(i, j) = detail::kMu[i * 4 + j].eval(gamma, eta, kSeriesSwitch);
  return mu;
}

SigmaTable sigma_entries(double gamma, double eta) {
  check_step(gamma, eta);
  SigmaTable s;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      s(i, j) = s(j, i) = detail::kSigma[i * 4 + j].eval(gamma, eta, kSeriesSwitch);
  return s;
}

double ito_kernel(int i, double gamma, double u) {
  if (i < 0 || i > 3) throw Error(ErrorKind::InvalidArgument, "ito_kernel: component out of range");
  return std::sqrt(2.0 * gamma) * detail::kKernel[i].eval(gamma, u, kSeriesSwitch);
}

Kernel4Coefficients kernel4_coefficients(double gamma, double eta) {
  Kernel4Coefficients k;
  k.gamma = gamma;
  k.eta = eta;
  k.mu = mu_coefficients(gamma, eta);
  k.sigma = sigma_entries(gamma, eta);
  for (int i = 0; i < 4; ++i) {
    for (int v = 0; v < 5; ++v)
      for (int p = 0; p < 3; ++p)
        k.quad[i][v][p] = detail::kQuad[i * 15 + v * 3 + p].eval(gamma, eta, kSeriesSwitch);
    for (int v = 0; v < 8; ++v)
      for (int p = 0; p < 3; ++p)
        k.logistic[i][v][p] = detail::kLogistic[i * 24 + v * 3 + p].eval(gamma, eta, kSeriesSwitch);
  }
  return k;
}

Vector mean_quadratic(const Kernel4Coefficients& k, const Vector& x, const Matrix& A,
                      const Vector& b) {
  const Eigen::Index d = b.size();
  if (x.size() != 4 * d || A.rows() != d || A.cols() != d)
    throw Error(ErrorKind::DimensionMismatch, "mean_quadratic: expected x of length 4d");
  // powers[var][p] = A^p · var
  std::array<std::array<Vector, 3>, 5> powers;
  for (int v = 0; v < 5; ++v) {
    powers[v][0] = v < 4 ? Vector(x.segment(v * d, d)) : Vector(-b);
    powers[v][1] = A * powers[v][0];
    powers[v][2] = A * powers[v][1];
  }
  Vector m = Vector::Zero(4 * d);
  for (int i = 0; i < 4; ++i)
    for (int v = 0; v < 5; ++v)
      for (int p = 0; p < 3; ++p)
        if (k.quad[i][v][p] != 0.0) m.segment(i * d, d) += k.quad[i][v][p] * powers[v][p];
  return m;
}

Vector mean_quadratic(const Vector& x, const Matrix& A, const Vector& b, double gamma, double eta) {
  return mean_quadratic(kernel4_coefficients(gamma, eta), x, A, b);
}

AffineMap affine_quadratic(const Kernel4Coefficients& k, const Matrix& A, const Vector& b) {
  const Eigen::Index d = b.size();
  const Matrix I = Matrix::Identity(d, d);
  const std::array<Matrix, 3> Ap = {I, A, A * A};
  AffineMap out;
  out.T = Matrix::Zero(4 * d, 4 * d);
  out.c = Vector::Zero(4 * d);
  for (int i = 0; i < 4; ++i) {
    for (int v = 0; v < 4; ++v)
      for (int p = 0; p < 3; ++p) out.T.block(i * d, v * d, d, d) += k.quad[i][v][p] * Ap[p];
    for (int p = 0; p < 3; ++p) out.c.segment(i * d, d) -= k.quad[i][4][p] * (Ap[p] * b);
  }
  return out;
}

Vector mean_logistic(const Kernel4Coefficients& k, const Vector& x, const LogisticPotential& pot) {
  const Eigen::Index d = pot.dim();
  if (x.size() != 4 * d) throw Error(ErrorKind::DimensionMismatch, "mean_logistic: expected 4d state");
  const Vector theta = x.segment(0, d);
  const Vector v1 = x.segment(d, d);
  const auto D = pot.data_derivatives(theta, v1);
  const double lam = pot.lambda();
  const std::array<double, 3> lp = {1.0, lam, lam * lam};
  std::array<Vector, 8> vars = {theta, v1, x.segment(2 * d, d), x.segment(3 * d, d),
                                D[0],  D[1], D[2],              D[3]};
  Vector m = Vector::Zero(4 * d);
  for (int i = 0; i < 4; ++i)
    for (int v = 0; v < 8; ++v) {
      double c = 0.0;
      for (int p = 0; p < 3; ++p) c += k.logistic[i][v][p] * lp[p];
      if (c != 0.0) m.segment(i * d, d) += c * vars[v];
    }
  return m;
}

Vector mean_logistic(const Vector& x, const LogisticPotential& pot, double gamma, double eta) {
  return mean_logistic(kernel4_coefficients(gamma, eta), x, pot);
}

Matrix StepLaw4::covariance() const {
  return kron_identity(sigma, static_cast<int>(mean.size() / 4));
}

StepLaw4 step_law(const Vector& x, const PotentialModel& potential, double gamma, double eta) {
  const auto k = kernel4_coefficients(gamma, eta);
  StepLaw4 law;
  law.sigma = k.sigma;
  if (const auto* q = dynamic_cast<const QuadraticPotential*>(&potential)) {
    law.mean = mean_quadratic(k, x, q->A(), q->b());
  } else if (const auto* l = dynamic_cast<const LogisticPotential*>(&potential)) {
    law.mean = mean_logistic(k, x, *l);
  } else {
    throw Error(ErrorKind::UnsupportedPotential,
                "closed-form fourth-order kernel supports quadratic and logistic potentials");
  }
  return law;
}

}  // namespace holmc
