#include "holmc/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "holmc/errors.hpp"

namespace holmc {

KappaConvention parse_kappa_convention(const std::string& s) {
  if (s == "theory") return KappaConvention::Theory;
  if (s == "example-compat") return KappaConvention::ExampleCompat;
  throw Error(ErrorKind::InvalidArgument, "unknown kappa convention '" + s + "'");
}

std::string to_string(KappaConvention c) {
  return c == KappaConvention::Theory ? "theory" : "example-compat";
}

Matrix build_bsim(int P) {
  if (P < 3) throw Error(ErrorKind::InvalidOrder, "P must be at least 3, got " + std::to_string(P));
  const int n = P - 1;
  Matrix B = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    B(i, i + 1) = -1.0;
    B(i + 1, i) = 1.0;
  }
  B(n - 1, n - 1) = 1.0;
  return B;
}

BsimSpectrum spectrum_bsim(int P) {
  const auto dec = eigen_decompose(build_bsim(P));
  std::vector<std::complex<double>> ev(dec.eigenvalues.data(),
                                       dec.eigenvalues.data() + dec.eigenvalues.size());
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  BsimSpectrum out;
  out.eigenvalues = Eigen::Map<CVector>(ev.data(), static_cast<Eigen::Index>(ev.size()));
  out.lambda_hat = ev.front().real();
  return out;
}

HResult compute_H(int P, double epsilon_policy) {
  const Matrix B = build_bsim(P);
  // Left eigenvectors: only these make H·B + Bᵀ·H ⪰ 2λ̂H hold.
  const auto dec = eigen_decompose(B.transpose());
  HResult out;
  out.condition = dec.condition_estimate;
  if (dec.condition_estimate > tol::kDiagonalizableCond) {
    out.diagonalizable = false;
    out.epsilon = epsilon_policy * spectrum_bsim(P).lambda_hat;
    throw Error(ErrorKind::DegenerateSpectrum,
                "eigenvector condition " + std::to_string(dec.condition_estimate) +
                    " exceeds threshold; Jordan-chain construction is not supported");
  }
  const Eigen::Index n = B.rows();
  CMatrix V = dec.eigenvectors;
  for (Eigen::Index j = 0; j < V.cols(); ++j) {
    const std::complex<double> last = V(n - 1, j);
    if (std::abs(last) < 1e-14)
      throw Error(ErrorKind::DegenerateSpectrum, "eigenvector with vanishing last component");
    V.col(j) /= last;
  }
  out.H = sym((V * V.adjoint()).real());
  return out;
}

HConstants compute_h_constants(const HResult& h, int P, KappaConvention convention) {
  HConstants c;
  // Sharp constant of H Aᵀ A H ⪯ h1·H with A selecting the first block: (H e₁)ᵀ H⁻¹ (H e₁) = H₀₀.
  c.h1 = h.H(0, 0);
  c.h2 = c.h3 = 1.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.H);
  const double inv_norm = 1.0 / es.eigenvalues().minCoeff();
  c.h4 = (1.0 + (P - 1) / 2.0) * inv_norm;
  c.h5 = (1.0 + P) * inv_norm;
  if (convention == KappaConvention::Theory) {
    c.kappa = spectrum_bsim(P).lambda_hat - h.epsilon;
  } else {
    c.kappa = es.eigenvalues().minCoeff();
  }
  return c;
}

double gamma_zero(double L, double h1, double h2, double h4, double h5, double kappa) {
  if (!(L > 0 && h1 > 0 && h2 > 0 && h4 > 0 && h5 > 0 && kappa > 0))
    throw Error(ErrorKind::InvalidArgument, "gamma_zero: all inputs must be positive");
  return 2.0 * std::sqrt(h1 * L / kappa) * std::max(std::sqrt(h2 * h5), std::sqrt(h4 / kappa));
}

Matrix assemble_m_sim(const Matrix& H, double kappa, double L, double h1, double gamma) {
  const Eigen::Index n = H.rows();
  Matrix M = Matrix::Zero(n + 1, n + 1);
  M(0, 0) = 1.0;
  M.block(0, 1, 1, n).setConstant(1.0 / gamma);
  M.block(1, 0, n, 1).setConstant(1.0 / gamma);
  M.bottomRightCorner(n, n) = kappa / (L * h1) * H;
  return M;
}

ContractionCertificate build_certificate(const CertificateInputs& in) {
  if (in.P < 3) throw Error(ErrorKind::InvalidOrder, "P must be at least 3");
  if (!(in.m > 0 && in.L >= in.m))
    throw Error(ErrorKind::InvalidArgument, "require 0 < m <= L");
  if (!(in.epsilon_policy > 0 && in.epsilon_policy < 1))
    throw Error(ErrorKind::InvalidArgument, "epsilon_policy must lie in (0, 1)");

  ContractionCertificate c;
  c.P = in.P;
  c.m = in.m;
  c.L = in.L;
  c.convention = in.convention;
  const auto spec = spectrum_bsim(in.P);
  c.spectrum = spec.eigenvalues;
  c.lambda_hat = spec.lambda_hat;

  const HResult h = compute_H(in.P, in.epsilon_policy);
  c.H = h.H;
  c.diagonalizable = h.diagonalizable;
  c.epsilon = h.epsilon;
  const HConstants k = compute_h_constants(h, in.P, in.convention);
  c.h1 = k.h1;
  c.h2 = k.h2;
  c.h3 = k.h3;
  c.h4 = k.h4;
  c.h5 = k.h5;
  c.kappa = k.kappa;
  c.gamma0 = gamma_zero(in.L, c.h1, c.h2, c.h4, c.h5, c.kappa);
  c.gamma = in.gamma.value_or(c.gamma0);
  if (c.gamma < c.gamma0 * (1.0 - 1e-12))
    throw Error(ErrorKind::FrictionTooSmall, "gamma " + std::to_string(c.gamma) +
                                                 " is below gamma0 " + std::to_string(c.gamma0));
  c.rho = std::min(in.m / (3.0 * c.h3 * c.gamma), c.gamma * c.kappa / 6.0);
  c.M_sim = assemble_m_sim(c.H, c.kappa, in.L, c.h1, c.gamma);
  Eigen::SelfAdjointEigenSolver<Matrix> es(c.M_sim);
  c.lambda_min_M = es.eigenvalues().minCoeff();
  c.lambda_max_M = es.eigenvalues().maxCoeff();
  const double g2 = c.gamma * c.gamma;
  c.eta_star = 0.5 * c.rho * c.lambda_min_M / c.lambda_max_M /
               (1.0 + (1.0 + 2.0 * (in.P - 2)) * g2 + in.L * in.L);
  return c;
}

Matrix build_drift_jacobian(int P, double gamma, const Matrix& hessian) {
  const Eigen::Index d = hessian.rows();
  const Matrix B = build_bsim(P);
  Matrix J = Matrix::Zero(P * d, P * d);
  J.block(0, d, d, d).setIdentity();
  J.block(d, 0, d, d) = -hessian;
  J.bottomRightCorner((P - 1) * d, (P - 1) * d) = -gamma * kron_identity(B, static_cast<int>(d));
  return J;
}

LmiReport verify_contraction_lmi(const ContractionCertificate& cert, const Matrix& hessian) {
  const int d = static_cast<int>(hessian.rows());
  const Matrix M = kron_identity(cert.M_sim, d);
  const Matrix J = build_drift_jacobian(cert.P, cert.gamma, hessian);
  const Matrix S = sym(M * J + J.transpose() * M + 2.0 * cert.rho * M);
  Eigen::SelfAdjointEigenSolver<Matrix> es(S, Eigen::EigenvaluesOnly);
  LmiReport r;
  r.max_eigenvalue = es.eigenvalues().maxCoeff();
  r.m_norm = cert.lambda_max_M;
  r.feasible = r.max_eigenvalue <= tol::kLmiFeasible * r.m_norm;
  return r;
}

}  // namespace holmc
