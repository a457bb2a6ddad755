#include "holmc/potentials.hpp"

#include <algorithm>
#include <cmath>

#include "holmc/constants.hpp"
#include "holmc/errors.hpp"

namespace holmc {

Vector TaylorLine::evaluate(double t) const {
  Vector out = coef[3];
  for (int k = 2; k >= 0; --k) out = coef[k] + t * out;
  return out;
}

Vector LineExpansion::evaluate(double t, const Vector& theta_path) const {
  Vector g = offset;
  if (linear.size() > 0) g += linear * theta_path;
  if (ridge != 0.0) g += ridge * theta_path;
  if (has_data) {
    g += derivative[0] + t * derivative[1] + (t * t / 2.0) * derivative[2] +
         (t * t * t / 6.0) * derivative[3];
  }
  return g;
}

Vector PotentialModel::evaluate_taylor_at(const Vector& center, const Vector& x) const {
  const TaylorLine tl = taylor_line(center, x - center, 3);
  return tl.coef[0] + tl.coef[1] + tl.coef[2] + tl.coef[3];
}

// Quadratic

QuadraticPotential::QuadraticPotential(Matrix A, Vector b, Provenance provenance)
    : A_(std::move(A)), b_(std::move(b)), provenance_(provenance) {
  if (A_.rows() != A_.cols() || A_.rows() != b_.size())
    throw Error(ErrorKind::DimensionMismatch, "QuadraticPotential: A must be d×d and b length d");
  if ((A_ - A_.transpose()).norm() > 1e-12 * std::max(1.0, A_.norm()))
    throw Error(ErrorKind::InvalidArgument, "QuadraticPotential: A must be symmetric");
  A_ = sym(A_);
  if (A_.rows() > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(A_, Eigen::EigenvaluesOnly);
    m_ = es.eigenvalues().minCoeff();
    L_ = es.eigenvalues().maxCoeff();
    if (!(m_ > 0)) throw Error(ErrorKind::NotPSD, "QuadraticPotential: A must be positive definite");
  }
}

double QuadraticPotential::value(const Vector& theta) const {
  return 0.5 * theta.dot(A_ * theta) - b_.dot(theta);
}

Vector QuadraticPotential::gradient(const Vector& theta) const { return A_ * theta - b_; }

std::pair<double, double> QuadraticPotential::hessian_bounds() const { return {m_, L_}; }

TaylorLine QuadraticPotential::taylor_line(const Vector& theta, const Vector& v, int degree) const {
  TaylorLine tl;
  tl.degree = degree;
  const Eigen::Index d = b_.size();
  tl.coef[0] = gradient(theta);
  tl.coef[1] = degree >= 1 ? Vector(A_ * v) : Vector::Zero(d);
  tl.coef[2] = Vector::Zero(d);
  tl.coef[3] = Vector::Zero(d);
  return tl;
}

LineExpansion QuadraticPotential::line_expansion(const Vector&, const Vector&) const {
  LineExpansion e;
  e.linear = A_;
  e.offset = -b_;
  return e;
}

Vector QuadraticPotential::minimizer() const { return A_.llt().solve(b_); }

QuadraticPotential quadratic_from_dataset(const Matrix& X, const Vector& y, double lambda) {
  if (X.rows() < 1) throw Error(ErrorKind::EmptyDataset, "quadratic_from_dataset: n = 0");
  if (y.size() != X.rows())
    throw Error(ErrorKind::DimensionMismatch, "quadratic_from_dataset: y length must equal rows of X");
  if (!(lambda > 0)) throw Error(ErrorKind::InvalidArgument, "lambda must be positive");
  const double n = static_cast<double>(X.rows());
  Matrix A = X.transpose() * X / n + lambda * Matrix::Identity(X.cols(), X.cols());
  Vector b = X.transpose() * y / n;
  return QuadraticPotential(sym(A), std::move(b), Provenance::FromDataset);
}

// Logistic

double sigmoid(double z) {
  z = std::clamp(z, -tol::kLogitClamp, tol::kLogitClamp);
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

// log(1 + e^z) without overflow.
double softplus(double z) {
  z = std::clamp(z, -tol::kLogitClamp, tol::kLogitClamp);
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

}  // namespace

LogisticPotential::LogisticPotential(Matrix X, Vector y, double lambda)
    : X_(std::move(X)), y_(std::move(y)), lambda_(lambda) {
  if (y_.size() != X_.rows())
    throw Error(ErrorKind::DimensionMismatch, "LogisticPotential: y length must equal rows of X");
  if (!(lambda_ > 0)) throw Error(ErrorKind::InvalidArgument, "lambda must be positive");
  for (Eigen::Index i = 0; i < y_.size(); ++i)
    if (y_(i) != 0.0 && y_(i) != 1.0)
      throw Error(ErrorKind::NonBinaryTarget, "labels must be 0 or 1");
  double op2 = 0.0;
  if (X_.size() > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(X_.transpose() * X_, Eigen::EigenvaluesOnly);
    op2 = std::max(0.0, es.eigenvalues().maxCoeff());
  }
  L_ = lambda_ + op2 / 4.0;
}

double LogisticPotential::value(const Vector& theta) const {
  const Vector z = X_ * theta;
  double u = 0.5 * lambda_ * theta.squaredNorm();
  for (Eigen::Index i = 0; i < z.size(); ++i) u += softplus(z(i)) - y_(i) * z(i);
  return u;
}

Vector LogisticPotential::gradient(const Vector& theta) const {
  if (theta.size() != X_.cols())
    throw Error(ErrorKind::DimensionMismatch, "logistic gradient: theta has wrong length");
  Vector z = X_ * theta;
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = sigmoid(z(i)) - y_(i);
  return X_.transpose() * z + lambda_ * theta;
}

Matrix LogisticPotential::hessian(const Vector& theta) const {
  const Vector z = X_ * theta;
  Vector w(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double s = sigmoid(z(i));
    w(i) = s * (1.0 - s);
  }
  Matrix H = X_.transpose() * w.asDiagonal() * X_;
  H.diagonal().array() += lambda_;
  return sym(H);
}

std::pair<double, double> LogisticPotential::hessian_bounds() const { return {lambda_, L_}; }

std::array<Vector, 4> LogisticPotential::data_derivatives(const Vector& theta,
                                                          const Vector& v) const {
  if (theta.size() != X_.cols() || v.size() != X_.cols())
    throw Error(ErrorKind::DimensionMismatch, "data_derivatives: dimension mismatch");
  const Vector z = X_ * theta;
  const Vector r = X_ * v;
  const Eigen::Index n = z.size();
  Vector w0(n), w1(n), w2(n), w3(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = sigmoid(z(i));
    const double s1 = s * (1.0 - s);
    w0(i) = s - y_(i);
    w1(i) = s1 * r(i);
    w2(i) = s1 * (1.0 - 2.0 * s) * r(i) * r(i);
    w3(i) = s1 * (1.0 - 6.0 * s + 6.0 * s * s) * r(i) * r(i) * r(i);
  }
  const Matrix Xt = X_.transpose();
  return {Vector(Xt * w0), Vector(Xt * w1), Vector(Xt * w2), Vector(Xt * w3)};
}

TaylorLine LogisticPotential::taylor_line(const Vector& theta, const Vector& v, int degree) const {
  if (degree != 3)
    throw Error(ErrorKind::DegreeUnsupported,
                "logistic Taylor line supports degree 3 only, got " + std::to_string(degree));
  const auto D = data_derivatives(theta, v);
  TaylorLine tl;
  tl.degree = 3;
  tl.coef[0] = D[0] + lambda_ * theta;
  tl.coef[1] = D[1] + lambda_ * v;
  tl.coef[2] = D[2] / 2.0;
  tl.coef[3] = D[3] / 6.0;
  return tl;
}

LineExpansion LogisticPotential::line_expansion(const Vector& theta, const Vector& v) const {
  LineExpansion e;
  e.ridge = lambda_;
  e.offset = Vector::Zero(X_.cols());
  e.derivative = data_derivatives(theta, v);
  e.has_data = true;
  return e;
}

Vector logistic_gradient(const LogisticPotential& pot, const Vector& theta) {
  return pot.gradient(theta);
}

TaylorLine logistic_taylor_line(const LogisticPotential& pot, const Vector& theta, const Vector& v,
                                int degree) {
  return pot.taylor_line(theta, v, degree);
}

}  // namespace holmc
