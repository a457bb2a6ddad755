// Acceptance checks. Each criterion prints one PASS/FAIL line followed by indented details.
// Exit status is nonzero when any selected criterion fails.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "holmc/certificate.hpp"
#include "holmc/cli/config.hpp"
#include "holmc/cli/data.hpp"
#include "holmc/cli/experiments.hpp"
#include "holmc/diagnostics.hpp"
#include "holmc/kernel4.hpp"
#include "holmc/kernel_general.hpp"
#include "holmc/potentials.hpp"

using namespace holmc;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { notes.push_back("info " + what); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Vector gaussian_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> nd;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = nd(rng);
  return v;
}

Matrix random_orthogonal(std::mt19937_64& rng, int d) {
  Matrix G(d, d);
  for (int i = 0; i < d; ++i) G.col(i) = gaussian_vector(rng, d);
  return Eigen::HouseholderQR<Matrix>(G).householderQ() * Matrix::Identity(d, d);
}

double rel(const auto& a, const auto& ref) { return (a - ref).norm() / std::max(ref.norm(), 1e-300); }

// Printed P = 4 example.
Outcome criterion1() {
  Outcome o;
  Matrix H_ref(3, 3);
  H_ref << 3.341, -1.004, -0.999, -1.004, 4.850, -2.000, -0.999, -2.000, 3.000;
  const std::vector<double> eig_ref = {6.168, 4.098, 0.924};
  Matrix Mblk(3, 3);
  Mblk << 0.924, -0.278, -0.276, -0.278, 1.341, -0.553, -0.276, -0.553, 0.830;
  const double gamma = 5.0, L = 1.0;
  Matrix M_ref(4, 4);
  M_ref(0, 0) = 1;
  for (int i = 1; i < 4; ++i) M_ref(0, i) = M_ref(i, 0) = 1 / gamma;
  M_ref.bottomRightCorner(3, 3) = Mblk / L;

  const auto h = compute_H(4);
  const double dH = (h.H - H_ref).cwiseAbs().maxCoeff();
  o.check(dH <= 0.005, fmt("H max entry gap %.4f (tolerance 0.005)", dH));
  Vector ev = Eigen::SelfAdjointEigenSolver<Matrix>(h.H).eigenvalues().reverse();
  double dev = 0;
  for (int i = 0; i < 3; ++i) dev = std::max(dev, std::abs(ev(i) - eig_ref[i]));
  o.check(dev <= 0.005, fmt("H eigenvalues {%.4f, %.4f, %.4f}, max gap %.4f", ev(0), ev(1), ev(2), dev));

  const auto hc = compute_h_constants(h, 4, KappaConvention::ExampleCompat);
  o.check(std::abs(hc.h1 - 3.341) <= 0.005, fmt("h1 = %.4f (printed 3.341)", hc.h1));
  o.check(std::abs(hc.h4 - 2.705) <= 0.005, fmt("h4 = %.4f (printed 2.705)", hc.h4));
  o.check(std::abs(hc.h5 - 5.410) <= 0.005, fmt("h5 = %.4f (printed 5.410)", hc.h5));

  const Matrix M = assemble_m_sim(h.H, hc.kappa, L, hc.h1, gamma);
  const double dM = (M - M_ref).cwiseAbs().maxCoeff();
  o.check(dM <= 0.005, fmt("M_sim (example-compat, L=1, gamma=5) max entry gap %.4f", dM));
  o.info(fmt("kappa (example-compat) = %.4f", hc.kappa));
  return o;
}

// Fourth-order closed forms against the stacked oracle.
Outcome criterion2() {
  Outcome o;
  double worst_mean = 0, worst_sigma = 0;
  std::mt19937_64 rng(2);
  std::vector<std::pair<Matrix, Vector>> instances;
  for (int i = 0; i < 5; ++i) {
    const int d = 1 + i % 3;
    const Matrix Q = random_orthogonal(rng, d);
    Vector spec(d);
    for (int k = 0; k < d; ++k) spec(k) = 0.5 + 1.5 * std::uniform_real_distribution<double>()(rng);
    instances.emplace_back(Q * spec.asDiagonal() * Q.transpose(), gaussian_vector(rng, d));
  }
  int cells = 0;
  for (double g : {0.5, 1.0, 2.0, 5.0})
    for (double eta : {0.005, 0.011, 0.05, 0.1})
      for (const auto& [A, b] : instances) {
        const int d = static_cast<int>(b.size());
        const Vector x = gaussian_vector(rng, 4 * d);
        const auto full = transition_quadratic(4, g, eta, A, b);
        worst_mean = std::max(worst_mean, rel(mean_quadratic(x, A, b, g, eta), Vector(full.T * x + full.c)));
        worst_sigma = std::max(worst_sigma, rel(kron_identity(sigma_entries(g, eta), d), full.Sigma));
        ++cells;
      }
  o.check(worst_mean <= 1e-6, fmt("mean vs stacked oracle: worst rel err %.2e over %d cells", worst_mean, cells));
  o.check(worst_sigma <= 1e-8, fmt("sigma vs Van Loan covariance: worst rel err %.2e", worst_sigma));

  const double g = 1.0, eta = 0.1;
  const auto [u, w] = gauss_legendre(64, 0.0, eta);
  Eigen::Matrix4d quad = Eigen::Matrix4d::Zero();
  for (std::size_t k = 0; k < u.size(); ++k) {
    Eigen::Vector4d K;
    for (int i = 0; i < 4; ++i) K(i) = ito_kernel(i, g, u[k]);
    quad += w[k] * K * K.transpose();
  }
  const double e_ito = rel(sigma_entries(g, eta), quad);
  o.check(e_ito <= 1e-6, fmt("sigma vs Ito-isometry quadrature (gamma=1, eta=0.1): rel err %.2e", e_ito));
  Eigen::Matrix4d quad_stage = Eigen::Matrix4d::Zero();
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Vector K = stage_kernels(4, g, u[k]);
    quad_stage += w[k] * K * K.transpose();
  }
  o.info(fmt("same quadrature with stacked-system kernels: rel err %.2e", rel(sigma_entries(g, eta), quad_stage)));
  return o;
}

// Logistic closed form against nested quadrature; line derivatives against Richardson.
Outcome criterion3() {
  Outcome o;
  const std::vector<std::pair<double, double>> steps = {{1.0, 0.011}, {1.0, 0.05}, {2.0, 0.05}, {5.0, 0.1}, {0.5, 0.1}};
  double worst_mean = 0, worst_d[3] = {0, 0, 0};
  for (unsigned s = 0; s < 10; ++s) {
    std::mt19937_64 rng(300 + s);
    const int n = 50, d = 5;
    Matrix X(n, d);
    Vector y(n);
    for (int i = 0; i < n; ++i) {
      X.row(i) = gaussian_vector(rng, d).transpose() / std::sqrt(double(d));
      y(i) = std::bernoulli_distribution(0.5)(rng) ? 1.0 : 0.0;
    }
    const LogisticPotential pot(X, y, 1.0 + 0.25 * s);
    const Vector x = gaussian_vector(rng, 4 * d);
    const auto [g, eta] = steps[s % steps.size()];
    const auto ref = mean_general(4, g, eta, x, pot, 3, CenterPolicy::Line);
    worst_mean = std::max(worst_mean, rel(mean_logistic(x, pot, g, eta), ref.mean));

    const Vector theta = x.head(d), v = x.segment(d, d);
    const auto tl = pot.taylor_line(theta, v, 3);
    auto om = [&](double t) { return Vector(pot.gradient(theta + t * v)); };
    auto d1 = [&](double h) { return Vector((om(h) - om(-h)) / (2 * h)); };
    auto d2 = [&](double h) { return Vector((om(h) - 2 * om(0) + om(-h)) / (h * h)); };
    auto d3 = [&](double h) { return Vector((om(2 * h) - 2 * om(h) + 2 * om(-h) - om(-2 * h)) / (2 * h * h * h)); };
    const Vector r1 = (4 * d1(1e-3) - d1(2e-3)) / 3;
    const Vector r2 = (4 * d2(1e-3) - d2(2e-3)) / 3;
    const Vector r3 = (4 * d3(1e-2) - d3(2e-2)) / 3;
    worst_d[0] = std::max(worst_d[0], rel(Vector(tl.coef[1]), r1));
    worst_d[1] = std::max(worst_d[1], rel(Vector(2 * tl.coef[2]), r2));
    worst_d[2] = std::max(worst_d[2], rel(Vector(6 * tl.coef[3]), r3));
  }
  o.check(worst_mean <= 1e-6, fmt("mean_logistic vs nested quadrature: worst rel err %.2e (10 instances)", worst_mean));
  o.check(worst_d[0] <= 1e-5, fmt("omega'(0) vs Richardson: worst rel err %.2e", worst_d[0]));
  o.check(worst_d[1] <= 1e-5, fmt("omega''(0) vs Richardson: worst rel err %.2e", worst_d[1]));
  o.check(worst_d[2] <= 1e-5, fmt("omega'''(0) vs Richardson: worst rel err %.2e", worst_d[2]));
  return o;
}

// Contraction LMI at twice the certified friction.
Outcome criterion4() {
  Outcome o;
  const double m = 0.5, L = 2.0;
  for (int P = 3; P <= 5; ++P) {
    CertificateInputs in{P, m, L, std::nullopt, 0.5, KappaConvention::Theory};
    const double g0 = build_certificate(in).gamma0;
    in.gamma = 2 * g0;
    const auto cert = build_certificate(in);
    std::mt19937_64 rng(400 + P);
    double worst = -1e300;
    int fails = 0;
    for (int i = 0; i < 20; ++i) {
      const int d = 1 + i % 3;
      const Matrix Q = random_orthogonal(rng, d);
      Vector spec(d);
      for (int k = 0; k < d; ++k) spec(k) = m + (L - m) * std::uniform_real_distribution<double>()(rng);
      if (i == 0) spec(0) = m;
      if (i == 1) spec(d - 1) = L;
      const auto lmi = verify_contraction_lmi(cert, Q * spec.asDiagonal() * Q.transpose());
      const double ratio = lmi.max_eigenvalue / lmi.m_norm;
      worst = std::max(worst, ratio);
      if (!(lmi.max_eigenvalue <= 1e-8 * lmi.m_norm)) ++fails;
    }
    o.check(fails == 0, fmt("P=%d, gamma=2*gamma0=%.3f: worst lambda_max/||M|| = %.3e, %d of 20 fail", P,
                            2 * g0, worst, fails));
  }
  return o;
}

// Stationary bias against step size per order.
Outcome criterion5() {
  Outcome o;
  const auto q = cli::synthetic_quadratic(4, 0.5, 2.0, 0);
  const std::vector<double> etas = {0.02, 0.04, 0.08, 0.16};
  auto gamma0 = [](int P) {
    return build_certificate({P, 0.5, 2.0, std::nullopt, 0.5, KappaConvention::Theory}).gamma0;
  };
  const auto study = cli::order_study(q.A, q.b, {3, 4}, etas, [&](int P) { return 2 * gamma0(P); });
  for (const auto& p : study.points)
    o.info(fmt("P=%d eta=%.2f gamma=%.2f spectral radius %.4g %s", p.P, p.eta, p.gamma, p.spectral_radius,
               p.contractive ? fmt("W2 %.4e", p.w2).c_str() : "not contractive"));
  double slope[2] = {NAN, NAN};
  for (int k = 0; k < 2; ++k) {
    const int P = 3 + k;
    std::vector<double> w;
    bool all = true;
    for (const auto& p : study.points)
      if (p.P == P) {
        all = all && p.contractive;
        w.push_back(p.w2);
      }
    bool increasing = all;
    for (std::size_t i = 1; all && i < w.size(); ++i) increasing = increasing && w[i] > w[i - 1];
    o.check(all, fmt("P=%d: exact stationary law exists at every eta", P));
    o.check(increasing, fmt("P=%d: W2 strictly decreases as eta decreases", P));
    const auto& s = study.slopes[k];
    if (s.fit && all) slope[k] = s.fit->slope;
  }
  o.check(slope[0] >= 1.5, fmt("slope(P=3) = %.3f >= 1.5", slope[0]));
  o.check(slope[1] >= slope[0] + 0.5, fmt("slope(P=4) = %.3f >= slope(P=3) + 0.5", slope[1]));

  for (double g : {1.0, 5.0}) {
    const auto alt = cli::order_study(q.A, q.b, {3, 4}, etas, [g](int) { return g; });
    std::string line = fmt("diagnostic at gamma=%.0f:", g);
    for (const auto& s : alt.slopes)
      line += s.fit ? fmt(" slope(P=%d) %.3f", s.P, s.fit->slope) : fmt(" slope(P=%d) undefined", s.P);
    o.info(line);
  }
  return o;
}

// End-to-end regression run with the default hyperparameters.
Outcome criterion6() {
  Outcome o;
  cli::ExperimentConfig c;
  c.task = cli::Task::Regression;
  c.data = "synthetic(4,500,0)";
  c.P = 4;
  c.eta = 0.011;
  c.gamma = 1.0;
  c.lambda = 2.0;
  c.N = 1000;
  c.seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  c.init = InitPolicy::StandardNormal;
  const auto r = cli::run_regression_experiment(c);
  const auto& s = r.json["series"][0];
  const double w0 = s["initial_w2"].get<double>();
  const double wt = s["terminal_window_w2"].get<double>();
  o.check(wt <= 0.1 * w0, fmt("terminal-window W2 %.4f vs initial W2 %.4f (ratio %.3f, required <= 0.1)", wt, w0,
                              wt / w0));
  const double z = s["max_abs_z"].get<double>();
  o.check(z <= 3.0, fmt("chain theta-mean within %.3f posterior sd of the posterior mean (required <= 3)", z));
  return o;
}

// Stage-difference exponents.
Outcome criterion7() {
  Outcome o;
  const std::vector<double> etas = {0.01, 0.02, 0.05, 0.1};
  std::mt19937_64 rng(7);
  Matrix A(2, 2);
  A << 1.0, 0.3, 0.3, 1.5;
  const QuadraticPotential q(A, gaussian_vector(rng, 2));
  struct Want {
    int P, stage, comp;
    double exponent;
    const char* name;
  };
  const std::vector<Want> wants = {{4, 2, 0, 4, "theta stage-2"}, {4, 2, 1, 2, "v1 stage-2"},
                                   {5, 2, 0, 4, "theta stage-2"}, {5, 2, 1, 2, "v1 stage-2"},
                                   {5, 3, 0, 8, "theta stage-3"}};
  for (int P : {4, 5}) {
    const Vector x = gaussian_vector(rng, 2 * P);
    const auto rows = stage_difference_orders(P, 1.0, etas, q, x);
    for (const auto& w : wants) {
      if (w.P != P) continue;
      double got = NAN;
      for (const auto& r : rows)
        if (r.stage == w.stage && r.component == w.comp) got = r.exponent;
      o.check(std::abs(got - w.exponent) <= 0.5,
              fmt("P=%d %s: exponent %.3f (predicted %.0f)", P, w.name, got, w.exponent));
    }
  }
  return o;
}

// Diagnostics examples.
Outcome criterion8() {
  Outcome o;
  const GaussianLaw a{Vector::Zero(1), Matrix::Identity(1, 1)};
  const GaussianLaw b{Vector::Ones(1), 4 * Matrix::Identity(1, 1)};
  const double w = w2_gaussians(a, b);
  o.check(std::abs(w - std::sqrt(2.0)) <= 1e-12, fmt("W2(N(0,1), N(1,4)) = %.15f (sqrt 2)", w));

  std::mt19937_64 rng(8);
  Matrix samples(10000, 2);
  for (Eigen::Index i = 0; i < samples.rows(); ++i) samples.row(i) = gaussian_vector(rng, 2).transpose();
  const auto curve = w2_trace({samples}, {Vector::Zero(2), Matrix::Identity(2, 2)}, default_checkpoints(10000));
  o.check(curve.mean.back() <= 0.1, fmt("Gaussian-fit W2 trace at 1e4 i.i.d. samples (d=2): %.4f", curve.mean.back()));

  Matrix X(1, 1);
  X << 1;
  Vector y(1);
  y << 2;
  const auto post = ridge_posterior(X, y, 1.0, 10.0);
  o.check(std::abs(post.mean(0) - 20.0 / 11) <= 1e-12 && std::abs(post.covariance(0, 0) - 10.0 / 11) <= 1e-12,
          fmt("ridge posterior scalar example: m = %.12f, V = %.12f", post.mean(0), post.covariance(0, 0)));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number(s) to run (default: all)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "printed P=4 certificate example", 1.0, criterion1},
      {2, "fourth-order closed forms vs stacked oracle", 30.0, criterion2},
      {3, "logistic mean and line derivatives", 10.0, criterion3},
      {4, "contraction LMI at 2*gamma0", 10.0, criterion4},
      {5, "order-of-accuracy study", 120.0, criterion5},
      {6, "end-to-end regression", 120.0, criterion6},
      {7, "stage-difference exponents", 30.0, criterion7},
      {8, "diagnostics examples", 10.0, criterion8},
  };

  bool ok = true;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.check(secs < c.budget_seconds, fmt("runtime %.3f s (budget %.0f s)", secs, c.budget_seconds));
    std::printf("criterion %d %s: %s\n", c.id, out.pass ? "PASS" : "FAIL", c.title);
    for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
    ok = ok && out.pass;
  }
  return ok ? 0 : 1;
}
