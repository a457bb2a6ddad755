#include "holmc/kernel_general.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <tuple>

#include "holmc/diagnostics.hpp"
#include "holmc/errors.hpp"

namespace holmc {

namespace {

void check_order(int P) {
  if (P < 3) throw Error(ErrorKind::InvalidOrder, "P must be at least 3, got " + std::to_string(P));
}

// Lift x ↦ (x, …, x, 1) onto the stacked state.
Matrix lift_matrix(const StackedSystem& sys) {
  const int nb = sys.block_size();
  Matrix lift = Matrix::Zero(sys.N, nb + 1);
  for (int c = 0; c < sys.P; ++c) lift.block(c * nb, 0, nb, nb).setIdentity();
  lift(sys.N - 1, nb) = 1.0;
  return lift;
}

}  // namespace

StackedSystem build_stacked_system(int P, double gamma, const Matrix& A, const Vector& b) {
  check_order(P);
  if (!(gamma > 0)) throw Error(ErrorKind::InvalidArgument, "gamma must be positive");
  const int d = static_cast<int>(b.size());
  if (A.rows() != d || A.cols() != d)
    throw Error(ErrorKind::DimensionMismatch, "build_stacked_system: A must be d×d");
  StackedSystem sys;
  sys.P = P;
  sys.gamma = gamma;
  sys.d = d;
  sys.N = (P - 1) * P * d + P * d + 1;
  sys.G = Matrix::Zero(sys.N, sys.N);
  sys.S = Matrix::Zero(sys.N, d);
  const Matrix I = Matrix::Identity(d, d);
  const int one = sys.const_index();
  auto blk = [&](int r, int c) { return sys.G.block(r, c, d, d); };
  for (int j = 1; j < P; ++j) {
    const int prev = j - 1;  // stage 1 reads the frozen copy
    blk(sys.index(j, 0), sys.index(j, 1)) += I;
    if (j > 1) {
      // v1' = −(A θ^{st_{j−1}} − b) + γ v2^{st_{j−1}}
      blk(sys.index(j, 1), sys.index(prev, 0)) -= A;
      sys.G.block(sys.index(j, 1), one, d, 1) += b;
      blk(sys.index(j, 1), sys.index(prev, 2)) += gamma * I;
    }
    for (int n = 2; n < P - 1; ++n) {
      blk(sys.index(j, n), sys.index(j, n - 1)) -= gamma * I;
      blk(sys.index(j, n), sys.index(prev, n + 1)) += gamma * I;
    }
    const int n = P - 1;
    blk(sys.index(j, n), sys.index(j, n - 1)) -= gamma * I;
    blk(sys.index(j, n), sys.index(j, n)) -= gamma * I;
    sys.S.block(sys.index(j, n), 0, d, d) = std::sqrt(2.0 * gamma) * I;
  }
  return sys;
}

StackedSystem build_stacked_system(int P, double gamma, int d) {
  return build_stacked_system(P, gamma, Matrix::Zero(d, d), Vector::Zero(d));
}

AffineGaussianKernel transition_quadratic(int P, double gamma, double eta, const Matrix& A,
                                          const Vector& b) {
  if (!(eta >= 0)) throw Error(ErrorKind::InvalidArgument, "eta must be nonnegative");
  const StackedSystem sys = build_stacked_system(P, gamma, A, b);
  const int nb = sys.block_size();
  const auto eg = expm_with_gramian(sys.G, sys.S * sys.S.transpose(), eta);
  const Matrix TM = (eg.phi * lift_matrix(sys)).middleRows((P - 1) * nb, nb);
  AffineGaussianKernel k;
  k.T = TM.leftCols(nb);
  k.c = TM.col(nb);
  k.Sigma = sym(eg.gramian.block((P - 1) * nb, (P - 1) * nb, nb, nb));
  k.P = P;
  k.gamma = gamma;
  k.eta = eta;
  k.potential_id = "quadratic";
  return k;
}

Matrix covariance_universal(int P, double gamma, double eta) {
  const StackedSystem sys = build_stacked_system(P, gamma, 1);
  const Matrix gram = van_loan_gramian(sys.G, sys.S * sys.S.transpose(), eta);
  return sym(gram.block((P - 1) * P, (P - 1) * P, P, P));
}

AffineGaussianKernel transition_quadratic_decoupled(int P, double gamma, double eta,
                                                    const Matrix& A, const Vector& b) {
  check_order(P);
  const Eigen::Index d = b.size();
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym(A));
  const Matrix& Q = es.eigenvectors();
  const Vector beta = Q.transpose() * b;
  AffineGaussianKernel k;
  k.T = Matrix::Zero(P * d, P * d);
  k.c = Vector::Zero(P * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Matrix a1(1, 1);
    a1(0, 0) = es.eigenvalues()(i);
    Vector b1(1);
    b1(0) = beta(i);
    const StackedSystem sys = build_stacked_system(P, gamma, a1, b1);
    const Matrix TM = (expm(sys.G * eta) * lift_matrix(sys)).middleRows((P - 1) * P, P);
    const Matrix qq = Q.col(i) * Q.col(i).transpose();
    for (int r = 0; r < P; ++r) {
      for (int c = 0; c < P; ++c)
        if (TM(r, c) != 0.0) k.T.block(r * d, c * d, d, d) += TM(r, c) * qq;
      k.c.segment(r * d, d) += TM(r, P) * Q.col(i);
    }
  }
  k.Sigma = kron_identity(covariance_universal(P, gamma, eta), static_cast<int>(d));
  k.P = P;
  k.gamma = gamma;
  k.eta = eta;
  k.potential_id = "quadratic";
  return k;
}

Vector stage_kernels(int P, double gamma, double u) {
  const StackedSystem sys = build_stacked_system(P, gamma, 1);
  return (expm(sys.G * u) * sys.S).middleRows((P - 1) * P, P).col(0);
}

CenterPolicy parse_center_policy(const std::string& s) {
  if (s == "current" || s == "current-iterate") return CenterPolicy::CurrentIterate;
  if (s == "origin") return CenterPolicy::Origin;
  if (s == "line") return CenterPolicy::Line;
  if (s == "exact") return CenterPolicy::Exact;
  throw Error(ErrorKind::InvalidArgument, "unknown center policy '" + s + "'");
}

namespace {

// Gauss-Legendre collocation tableau on [0, 1].
struct Collocation {
  std::vector<double> c, w;
  Matrix a;
};

Collocation make_collocation(int q) {
  Collocation col;
  std::tie(col.c, col.w) = gauss_legendre(q, 0.0, 1.0);
  col.a = Matrix::Zero(q, q);
  for (int i = 0; i < q; ++i) {
    const auto [x, w] = gauss_legendre(q, 0.0, col.c[i]);
    for (int j = 0; j < q; ++j) {
      double s = 0.0;
      for (int k = 0; k < q; ++k) {
        double l = 1.0;
        for (int m = 0; m < q; ++m)
          if (m != j) l *= (x[k] - col.c[m]) / (col.c[j] - col.c[m]);
        s += w[k] * l;
      }
      col.a(i, j) = s;
    }
  }
  return col;
}

using Surrogate = std::function<Vector(double, const Vector&)>;

// Stage-recursion right-hand side. y holds copies 1..P−1, each with P blocks of size d.
void stage_rhs(int P, int d, double gamma, const Vector& x, const Surrogate& g, double t,
               const Vector& y, Vector& out) {
  out.setZero(y.size());
  const int nb = P * d;
  auto cur = [&](int j, int n) { return y.segment((j - 1) * nb + n * d, d); };
  auto prv = [&](int j, int n) {
    return j == 1 ? x.segment(n * d, d) : y.segment((j - 2) * nb + n * d, d);
  };
  for (int j = 1; j < P; ++j) {
    auto o = [&](int n) { return out.segment((j - 1) * nb + n * d, d); };
    o(0) = cur(j, 1);
    if (j > 1) o(1) = -g(t, prv(j, 0)) + gamma * prv(j, 2);
    for (int n = 2; n < P - 1; ++n) o(n) = -gamma * cur(j, n - 1) + gamma * prv(j, n + 1);
    o(P - 1) = -gamma * cur(j, P - 2) - gamma * cur(j, P - 1);
  }
}

Vector integrate_stages(int P, double gamma, double eta, const Vector& x, const Surrogate& g,
                        int substeps, const Collocation& col) {
  const int d = static_cast<int>(x.size()) / P;
  const int q = static_cast<int>(col.c.size());
  const int nb = P * d;
  Vector y(static_cast<Eigen::Index>((P - 1) * nb));
  for (int j = 1; j < P; ++j) y.segment((j - 1) * nb, nb) = x;
  const double h = eta / substeps;
  std::vector<Vector> K(q, Vector::Zero(y.size())), Knew(q);
  Vector tmp;
  for (int step = 0; step < substeps; ++step) {
    const double t0 = step * h;
    stage_rhs(P, d, gamma, x, g, t0, y, K[0]);
    for (int i = 1; i < q; ++i) K[i] = K[0];
    for (int it = 0; it < 100; ++it) {
      double change = 0.0, scale = 1e-300;
      for (int i = 0; i < q; ++i) {
        Vector Y = y;
        for (int j = 0; j < q; ++j) Y += h * col.a(i, j) * K[j];
        stage_rhs(P, d, gamma, x, g, t0 + col.c[i] * h, Y, tmp);
        Knew[i] = tmp;
      }
      for (int i = 0; i < q; ++i) {
        change = std::max(change, (Knew[i] - K[i]).cwiseAbs().maxCoeff());
        scale = std::max(scale, Knew[i].cwiseAbs().maxCoeff());
        K[i] = Knew[i];
      }
      if (change <= 1e-15 * scale) break;
    }
    for (int i = 0; i < q; ++i) y += h * col.w[i] * K[i];
  }
  return y.segment((P - 2) * nb, nb);
}

}  // namespace

GeneralMean mean_general(int P, double gamma, double eta, const Vector& x,
                         const PotentialModel& potential, int degree, CenterPolicy policy,
                         int substeps) {
  check_order(P);
  if (substeps < tol::kMinSubsteps)
    throw Error(ErrorKind::InvalidArgument,
                "substeps must be at least " + std::to_string(tol::kMinSubsteps));
  const int d = potential.dim();
  if (x.size() != P * d) throw Error(ErrorKind::DimensionMismatch, "mean_general: x must have length P·d");
  const bool quadratic = dynamic_cast<const QuadraticPotential*>(&potential) != nullptr;
  if (!quadratic && degree != 3)
    throw Error(ErrorKind::DegreeUnsupported, "non-quadratic surrogates support degree 3 only");

  const Vector theta = x.segment(0, d);
  const Vector v1 = x.segment(d, d);
  Surrogate g;
  switch (policy) {
    case CenterPolicy::CurrentIterate:
      g = [&, theta](double, const Vector& p) { return potential.evaluate_taylor_at(theta, p); };
      break;
    case CenterPolicy::Origin: {
      const Vector zero = Vector::Zero(d);
      g = [&, zero](double, const Vector& p) { return potential.evaluate_taylor_at(zero, p); };
      break;
    }
    case CenterPolicy::Line: {
      const LineExpansion e = potential.line_expansion(theta, v1);
      g = [e](double t, const Vector& p) { return e.evaluate(t, p); };
      break;
    }
    case CenterPolicy::Exact:
      g = [&](double, const Vector& p) { return potential.gradient(p); };
      break;
  }
  const Collocation col = make_collocation(4);
  const Vector coarse = integrate_stages(P, gamma, eta, x, g, substeps, col);
  const Vector fine = integrate_stages(P, gamma, eta, x, g, 2 * substeps, col);
  GeneralMean out;
  out.mean = fine;
  out.substeps = 2 * substeps;
  out.richardson_gap = (fine - coarse).norm() / std::max(fine.norm(), 1e-300);
  if (out.richardson_gap > tol::kQuadratureError)
    throw Error(ErrorKind::QuadratureNotConverged,
                "Richardson gap " + std::to_string(out.richardson_gap));
  out.accuracy_warning = out.richardson_gap > tol::kQuadratureWarn;
  return out;
}

std::vector<std::vector<double>> stage_differences(int P, double gamma, double eta,
                                                   const QuadraticPotential& potential,
                                                   const Vector& x, int time_points) {
  const StackedSystem sys = build_stacked_system(P, gamma, potential.A(), potential.b());
  const int nb = sys.block_size();
  const int d = sys.d;
  if (x.size() != nb) throw Error(ErrorKind::DimensionMismatch, "stage_differences: x must be P·d");
  // W maps copies to consecutive differences; W⁻¹ is the cumulative sum.
  Matrix W = Matrix::Identity(sys.N, sys.N);
  Matrix Winv = Matrix::Identity(sys.N, sys.N);
  for (int c = 1; c < P; ++c) {
    W.block(c * nb, (c - 1) * nb, nb, nb) = -Matrix::Identity(nb, nb);
    for (int k = 0; k < c; ++k) Winv.block(c * nb, k * nb, nb, nb).setIdentity();
  }
  const Matrix Gd = W * sys.G * Winv;
  Vector z0 = Vector::Zero(sys.N);
  z0.segment(0, nb) = x;
  z0(sys.N - 1) = 1.0;
  std::vector<std::vector<double>> sup(P - 2, std::vector<double>(P, 0.0));
  for (int k = 1; k <= time_points; ++k) {
    const double t = eta * k / time_points;
    const Vector z = expm(Gd * t) * z0;
    for (int j = 2; j < P; ++j)
      for (int n = 0; n < P; ++n)
        sup[j - 2][n] = std::max(sup[j - 2][n], z.segment(j * nb + n * d, d).squaredNorm());
  }
  return sup;
}

std::vector<StageDifferenceRow> stage_difference_orders(int P, double gamma,
                                                        const std::vector<double>& eta_list,
                                                        const QuadraticPotential& potential,
                                                        const Vector& x) {
  if (eta_list.size() < 2) throw Error(ErrorKind::SlopeUndefined, "need at least two step sizes");
  const double span = *std::max_element(eta_list.begin(), eta_list.end()) /
                      *std::min_element(eta_list.begin(), eta_list.end());
  if (span < 10.0 * (1.0 - 1e-12))
    throw Error(ErrorKind::InvalidArgument, "eta_list must span at least one decade");
  std::vector<std::vector<std::vector<double>>> all;
  for (double eta : eta_list) all.push_back(stage_differences(P, gamma, eta, potential, x));
  std::vector<StageDifferenceRow> rows;
  for (int j = 2; j < P; ++j)
    for (int n = 0; n < P; ++n) {
      StageDifferenceRow r;
      r.stage = j;
      r.component = n;
      for (const auto& a : all) r.values.push_back(a[j - 2][n]);
      const bool positive = std::all_of(r.values.begin(), r.values.end(), [](double v) { return v > 0; });
      r.exponent = positive ? fit_order_slope(eta_list, r.values).slope
                            : std::numeric_limits<double>::quiet_NaN();
      rows.push_back(std::move(r));
    }
  return rows;
}

}  // namespace holmc
