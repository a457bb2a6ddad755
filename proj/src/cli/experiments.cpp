#include "holmc/cli/experiments.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <boost/version.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

#include "holmc/cli/data.hpp"
#include "holmc/errors.hpp"
#include "holmc/kernel4.hpp"
#include "holmc/kernel_general.hpp"
#include "holmc/sampler.hpp"

namespace holmc::cli {

using json = nlohmann::ordered_json;

double terminal_window_mean(const Curve& c, double fraction) {
  if (c.mean.empty()) throw Error(ErrorKind::InvalidArgument, "curve has no checkpoints");
  const auto n = c.mean.size();
  const auto w = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(fraction * n)));
  double s = 0;
  for (std::size_t i = n - w; i < n; ++i) s += c.mean[i];
  return s / static_cast<double>(w);
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HOLMC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    spdlog::warn("ignoring invalid HOLMC_THREADS='{}'", env);
  }
  return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace {

std::string hex(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json matrix_json(const Matrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) r.push_back(M(i, j));
    rows.push_back(r);
  }
  return rows;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json versions_json() {
  json v;
  v["holmc"] = "0.1.0";
  v["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
               std::to_string(EIGEN_MINOR_VERSION);
  v["boost"] = BOOST_LIB_VERSION;
  v["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  return v;
}

json curve_json(const Curve& c) {
  json j;
  j["series"] = c.series;
  j["metric"] = c.metric;
  j["checkpoints"] = c.checkpoints;
  j["mean"] = c.mean;
  j["half_std"] = c.half_std;
  return j;
}

Dataset load_dataset(const ExperimentConfig& c, bool classification) {
  const DataSpec spec = parse_data_spec(c.data);
  IngestOptions opt{c.target_column, c.split, c.standardize, c.intercept, 0};
  if (spec.kind == "csv") return ingest_csv(spec.path, opt, c.one_hot);
  if (spec.kind != "synthetic")
    throw Error(ErrorKind::InvalidArgument, "'" + c.data + "' describes a quadratic target, not a dataset");
  if (!c.one_hot.empty()) throw Error(ErrorKind::InvalidArgument, "--one-hot applies to CSV data only");
  if (!c.target_column.empty() && c.target_column != "y")
    throw Error(ErrorKind::MissingColumn, "synthetic data has target column 'y' only");
  const int d = static_cast<int>(spec.args[0]);
  const int n = static_cast<int>(spec.args[1]);
  const auto seed = static_cast<std::uint64_t>(spec.args[2]);
  const NumericTable t = classification ? [&] {
    const auto s = synthetic_classification(d, n, seed);
    return table_from(s.X, s.y);
  }()
                                        : [&] {
    const auto s = synthetic_regression(d, n, seed);
    return table_from(s.X, s.y);
  }();
  return prepare(t, opt);
}

json dataset_json(const Dataset& ds) {
  json j;
  j["n_train"] = ds.X_train.rows();
  j["n_test"] = ds.X_test.rows();
  j["d"] = ds.X_train.cols();
  j["features"] = ds.feature_names;
  j["dropped"] = ds.dropped;
  return j;
}

json certificate_summary(int P, double m, double L, double gamma, KappaConvention conv) {
  json j;
  try {
    const auto cert = build_certificate({P, m, L, std::nullopt, 0.5, conv});
    j["m"] = m;
    j["L"] = L;
    j["convention"] = to_string(conv);
    j["gamma0"] = cert.gamma0;
    j["rho_at_gamma0"] = cert.rho;
    j["eta_star_at_gamma0"] = cert.eta_star;
    j["gamma"] = gamma;
    j["gamma_certified"] = gamma >= cert.gamma0;
  } catch (const Error& e) {
    j["error"] = e.what();
  }
  return j;
}

/// Quadratic step as an affine Gaussian kernel: closed form at P = 4, exact stacked system else.
AffineGaussianKernel quadratic_kernel(int P, double gamma, double eta, const QuadraticPotential& q) {
  if (P != 4) return transition_quadratic_decoupled(P, gamma, eta, q.A(), q.b());
  const auto k = kernel4_coefficients(gamma, eta);
  const auto am = affine_quadratic(k, q.A(), q.b());
  AffineGaussianKernel g;
  g.T = am.T;
  g.c = am.c;
  g.Sigma = kron_identity(k.sigma, q.dim());
  g.P = 4;
  g.gamma = gamma;
  g.eta = eta;
  g.potential_id = "quadratic";
  return g;
}

double check_contractive(const AffineGaussianKernel& k) {
  const double r = spectral_radius(k.T);
  if (!(r < 1.0 - tol::kContractiveMargin)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "eta=%.6g, gamma=%.6g: one-step spectral radius %.6g >= 1", k.eta,
                  k.gamma, r);
    throw Error(ErrorKind::NotContractive, buf);
  }
  return r;
}

struct Chains {
  std::vector<Matrix> theta;  // per seed, N×d
  std::vector<std::uint64_t> fingerprints;
  double jitter = 0;
};

Chains run_chains(const StepLawProvider& provider, const PotentialModel& potential,
                  const ExperimentConfig& c, int P, double gamma, double eta) {
  Chains out;
  const std::size_t ns = c.seeds.size();
  out.theta.resize(ns);
  out.fingerprints.resize(ns);
  std::vector<double> jitters(ns, 0.0);
  parallel_for(ns, [&](std::size_t s) {
    ChainConfig cc;
    cc.P = P;
    cc.gamma = gamma;
    cc.eta = eta;
    cc.N = c.iterations();
    cc.seed = c.seeds[s];
    cc.chain = 0;
    cc.init = c.init;
    const Trajectory t = run_chain(provider, cc, potential);
    out.theta[s] = t.theta();
    out.fingerprints[s] = t.rng_fingerprint;
    jitters[s] = t.jitter;
  });
  out.jitter = *std::max_element(jitters.begin(), jitters.end());
  return out;
}

Curve to_curve(const W2Curve& w, std::string series) {
  Curve c;
  c.series = std::move(series);
  c.metric = "w2";
  c.checkpoints = w.checkpoints;
  c.per_seed = w.per_seed;
  c.mean = w.mean;
  c.half_std = w.half_std;
  return c;
}

Curve accuracy_curve(const std::vector<std::vector<double>>& per_seed, std::vector<long> checkpoints,
                     std::string series) {
  Curve c;
  c.series = std::move(series);
  c.metric = "accuracy";
  c.checkpoints = std::move(checkpoints);
  c.per_seed = per_seed;
  const double ns = static_cast<double>(per_seed.size());
  for (std::size_t k = 0; k < c.checkpoints.size(); ++k) {
    double s = 0, sq = 0;
    for (const auto& row : per_seed) s += row[k];
    const double mu = s / ns;
    for (const auto& row : per_seed) sq += (row[k] - mu) * (row[k] - mu);
    c.mean.push_back(mu);
    c.half_std.push_back(0.5 * std::sqrt(sq / ns));
  }
  return c;
}

std::string series_name(int P, double gamma, double eta) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "P=%d gamma=%g eta=%g", P, gamma, eta);
  return buf;
}

struct RegressionSetup {
  Dataset ds;
  std::shared_ptr<QuadraticPotential> potential;
  GaussianLaw target;
  json target_json;
};

RegressionSetup regression_setup(const ExperimentConfig& c) {
  RegressionSetup s;
  s.ds = load_dataset(c, false);
  const double lambda = c.lambda_or_default();
  s.potential = std::make_shared<QuadraticPotential>(quadratic_from_dataset(s.ds.X_train, s.ds.y_train, lambda));
  const double n = static_cast<double>(s.ds.X_train.rows());
  json tj;
  if (c.w2_target == W2Target::Gibbs) {
    const Matrix Ainv = s.potential->A().inverse();
    s.target = {s.potential->minimizer(), sym(Ainv)};
    tj["kind"] = "gibbs";
  } else {
    // Defaults make the posterior coincide with the Gibbs law of U.
    const double prior_var = c.prior_var ? *c.prior_var : 1.0 / lambda;
    const double noise_var = c.noise_var ? *c.noise_var : n;
    s.target = ridge_posterior(s.ds.X_train, s.ds.y_train, noise_var, prior_var);
    tj["kind"] = "posterior";
    tj["prior_var"] = prior_var;
    tj["noise_var"] = noise_var;
  }
  tj["mean"] = vector_json(s.target.mean);
  tj["covariance"] = matrix_json(s.target.covariance);
  s.target_json = tj;
  return s;
}

struct RegressionSeries {
  Curve curve;
  json summary;
};

RegressionSeries regression_series(const ExperimentConfig& c, const RegressionSetup& s, int P,
                                   double gamma, double eta) {
  const auto kernel = quadratic_kernel(P, gamma, eta, *s.potential);
  const double radius = check_contractive(kernel);
  const AffineProvider provider(kernel);
  const Chains ch = run_chains(provider, *s.potential, c, P, gamma, eta);
  const auto w = w2_trace(ch.theta, s.target, default_checkpoints(c.iterations()));
  RegressionSeries r;
  r.curve = to_curve(w, series_name(P, gamma, eta));
  if (r.curve.mean.empty()) throw Error(ErrorKind::DegenerateFit, "no checkpoint has d+1 samples");

  const Eigen::Index d = s.target.mean.size();
  Vector chain_mean = Vector::Zero(d);
  for (const auto& t : ch.theta) chain_mean += t.colwise().mean().transpose();
  chain_mean /= static_cast<double>(ch.theta.size());
  const Vector sd = s.target.covariance.diagonal().cwiseSqrt();
  const Vector z = (chain_mean - s.target.mean).cwiseQuotient(sd);

  json j;
  j["name"] = r.curve.series;
  j["metric"] = "w2";
  j["order"] = P;
  j["gamma"] = gamma;
  j["eta"] = eta;
  j["spectral_radius"] = radius;
  j["jitter"] = ch.jitter;
  j["initial_w2"] = r.curve.mean.front();
  j["terminal_window_w2"] = terminal_window_mean(r.curve);
  j["terminal_over_initial"] = terminal_window_mean(r.curve) / r.curve.mean.front();
  j["skipped_checkpoints"] = w.skipped;
  j["chain_theta_mean"] = vector_json(chain_mean);
  j["mean_z_scores"] = vector_json(z);
  j["max_abs_z"] = z.cwiseAbs().maxCoeff();
  json fp = json::array();
  for (auto f : ch.fingerprints) fp.push_back(hex(f));
  j["rng_fingerprints"] = fp;
  r.summary = j;
  return r;
}

struct ClassificationSetup {
  Dataset ds;
  std::shared_ptr<LogisticPotential> potential;
};

ClassificationSetup classification_setup(const ExperimentConfig& c) {
  ClassificationSetup s;
  s.ds = load_dataset(c, true);
  if (s.ds.X_test.rows() == 0) throw Error(ErrorKind::EmptyTestSet, "the test split is empty");
  for (Eigen::Index i = 0; i < s.ds.y_test.size(); ++i)
    if (s.ds.y_test(i) != 0.0 && s.ds.y_test(i) != 1.0)
      throw Error(ErrorKind::NonBinaryTarget, "test labels must be 0 or 1");
  s.potential = std::make_shared<LogisticPotential>(s.ds.X_train, s.ds.y_train, c.lambda_or_default());
  return s;
}

struct ClassificationSeries {
  Curve curve;
  json summary;
};

ClassificationSeries classification_series(const ExperimentConfig& c, const ClassificationSetup& s,
                                           int P, double gamma, double eta) {
  std::unique_ptr<StepLawProvider> provider;
  if (P == 4)
    provider = std::make_unique<Kernel4Provider>(s.potential, gamma, eta);
  else
    provider = std::make_unique<GeneralProvider>(s.potential, P, gamma, eta, CenterPolicy::Line);
  const Chains ch = run_chains(*provider, *s.potential, c, P, gamma, eta);
  const auto cps = default_checkpoints(c.iterations());
  std::vector<std::vector<double>> acc(ch.theta.size());
  for (std::size_t k = 0; k < ch.theta.size(); ++k)
    acc[k] = classification_accuracy(ch.theta[k], s.ds.X_test, s.ds.y_test, cps);
  ClassificationSeries r;
  r.curve = accuracy_curve(acc, cps, series_name(P, gamma, eta));
  const double majority = std::max(s.ds.y_test.mean(), 1.0 - s.ds.y_test.mean());
  json j;
  j["name"] = r.curve.series;
  j["metric"] = "accuracy";
  j["order"] = P;
  j["gamma"] = gamma;
  j["eta"] = eta;
  j["jitter"] = ch.jitter;
  j["terminal_accuracy"] = r.curve.mean.back();
  j["majority_rate"] = majority;
  json fp = json::array();
  for (auto f : ch.fingerprints) fp.push_back(hex(f));
  j["rng_fingerprints"] = fp;
  r.summary = j;
  return r;
}

json base_report(const ExperimentConfig& c) {
  json j;
  j["config"] = to_json(c);
  j["versions"] = versions_json();
  return j;
}

}  // namespace

json certificate_json(const ContractionCertificate& cert) {
  json j;
  j["P"] = cert.P;
  j["m"] = cert.m;
  j["L"] = cert.L;
  j["convention"] = to_string(cert.convention);
  json spec = json::array();
  for (Eigen::Index i = 0; i < cert.spectrum.size(); ++i)
    spec.push_back({cert.spectrum(i).real(), cert.spectrum(i).imag()});
  j["spectrum"] = spec;
  j["lambda_hat"] = cert.lambda_hat;
  j["kappa"] = cert.kappa;
  j["diagonalizable"] = cert.diagonalizable;
  j["epsilon"] = cert.epsilon;
  j["H"] = matrix_json(cert.H);
  j["h1"] = cert.h1;
  j["h2"] = cert.h2;
  j["h3"] = cert.h3;
  j["h4"] = cert.h4;
  j["h5"] = cert.h5;
  j["gamma0"] = cert.gamma0;
  j["gamma"] = cert.gamma;
  j["rho"] = cert.rho;
  j["M_sim"] = matrix_json(cert.M_sim);
  j["lambda_min_M"] = cert.lambda_min_M;
  j["lambda_max_M"] = cert.lambda_max_M;
  j["eta_star"] = cert.eta_star;
  return j;
}

OrderStudy order_study(const Matrix& A, const Vector& b, const std::vector<int>& orders,
                       const std::vector<double>& etas,
                       const std::function<double(int)>& gamma_for_order) {
  const Eigen::Index d = b.size();
  const GaussianLaw gibbs{A.ldlt().solve(b), sym(A.inverse())};
  OrderStudy study;
  std::vector<OrderPoint> points(orders.size() * etas.size());
  parallel_for(points.size(), [&](std::size_t idx) {
    OrderPoint& pt = points[idx];
    pt.P = orders[idx / etas.size()];
    pt.eta = etas[idx % etas.size()];
    pt.gamma = gamma_for_order(pt.P);
    const auto k = transition_quadratic(pt.P, pt.gamma, pt.eta, A, b);
    pt.spectral_radius = spectral_radius(k.T);
    pt.contractive = pt.spectral_radius < 1.0 - tol::kContractiveMargin;
    pt.w2 = std::numeric_limits<double>::quiet_NaN();
    if (!pt.contractive) return;
    const auto law = stationary_law_affine(k);
    const GaussianLaw marginal{law.mean.head(d), law.covariance.topLeftCorner(d, d)};
    pt.w2 = w2_gaussians(marginal, gibbs);
  });
  study.points = points;
  for (int P : orders) {
    OrderSlope s;
    s.P = P;
    std::vector<double> e, w;
    for (const auto& pt : points)
      if (pt.P == P && pt.contractive) {
        e.push_back(pt.eta);
        w.push_back(pt.w2);
      }
    try {
      s.fit = fit_order_slope(e, w);
    } catch (const Error& err) {
      s.error = err.what();
    }
    study.slopes.push_back(s);
  }
  return study;
}

ExperimentReport run_regression_experiment(const ExperimentConfig& c) {
  validate(c);
  const auto t0 = std::chrono::steady_clock::now();
  const RegressionSetup s = regression_setup(c);
  ExperimentReport r;
  r.seeds = c.seeds;
  r.json = base_report(c);
  r.json["dataset"] = dataset_json(s.ds);
  r.json["target"] = s.target_json;
  const auto [m, L] = s.potential->hessian_bounds();
  r.json["certificate"] = certificate_summary(c.P, m, L, c.gamma, c.convention);
  const std::vector<double> gammas = c.gamma_grid.empty() ? std::vector<double>{c.gamma} : c.gamma_grid;
  json series = json::array();
  for (double g : gammas) {
    auto rs = regression_series(c, s, c.P, g, c.eta);
    series.push_back(rs.summary);
    r.curves.push_back(std::move(rs.curve));
  }
  r.json["series"] = series;
  json curves = json::array();
  for (const auto& cv : r.curves) curves.push_back(curve_json(cv));
  r.json["curves"] = curves;
  r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ExperimentReport run_classification_experiment(const ExperimentConfig& c) {
  validate(c);
  const auto t0 = std::chrono::steady_clock::now();
  const ClassificationSetup s = classification_setup(c);
  ExperimentReport r;
  r.seeds = c.seeds;
  r.json = base_report(c);
  r.json["dataset"] = dataset_json(s.ds);
  const auto [m, L] = s.potential->hessian_bounds();
  r.json["certificate"] = certificate_summary(c.P, m, L, c.gamma, c.convention);
  const std::vector<double> gammas = c.gamma_grid.empty() ? std::vector<double>{c.gamma} : c.gamma_grid;
  json series = json::array();
  for (double g : gammas) {
    auto cs = classification_series(c, s, c.P, g, c.eta);
    series.push_back(cs.summary);
    r.curves.push_back(std::move(cs.curve));
  }
  r.json["series"] = series;
  json curves = json::array();
  for (const auto& cv : r.curves) curves.push_back(curve_json(cv));
  r.json["curves"] = curves;
  r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ExperimentReport run_grid_search(const ExperimentConfig& c) {
  validate(c);
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.seeds = c.seeds;
  r.json = base_report(c);
  const bool by_accuracy = c.grid_task == Task::Classification;

  struct Row {
    double eta, gamma;
    bool ok;
    double score;
    std::string error;
  };
  std::vector<Row> rows;
  std::optional<RegressionSetup> rs;
  std::optional<ClassificationSetup> cs;
  if (by_accuracy)
    cs = classification_setup(c);
  else
    rs = regression_setup(c);
  json series = json::array();
  for (double eta : c.eta_grid)
    for (double g : c.gamma_grid) {
      Row row{eta, g, false, 0.0, ""};
      try {
        if (by_accuracy) {
          auto out = classification_series(c, *cs, c.P, g, eta);
          row.score = out.curve.mean.back();
          series.push_back(out.summary);
          r.curves.push_back(std::move(out.curve));
        } else {
          auto out = regression_series(c, *rs, c.P, g, eta);
          row.score = terminal_window_mean(out.curve);
          series.push_back(out.summary);
          r.curves.push_back(std::move(out.curve));
        }
        row.ok = std::isfinite(row.score);
        if (!row.ok) row.error = "non-finite score";
      } catch (const Error& e) {
        row.error = e.what();
      }
      rows.push_back(row);
    }
  std::vector<Row> ranked;
  for (const auto& row : rows)
    if (row.ok) ranked.push_back(row);
  if (ranked.empty()) throw Error(ErrorKind::AllConfigsFailed, "every grid point diverged or failed");
  std::stable_sort(ranked.begin(), ranked.end(), [&](const Row& a, const Row& b) {
    if (a.score != b.score) return by_accuracy ? a.score > b.score : a.score < b.score;
    if (a.eta != b.eta) return a.eta < b.eta;
    return a.gamma < b.gamma;
  });
  json table = json::array();
  int rank = 1;
  for (const auto& row : ranked)
    table.push_back({{"rank", rank++}, {"eta", row.eta}, {"gamma", row.gamma}, {"score", row.score}, {"status", "ok"}});
  for (const auto& row : rows)
    if (!row.ok)
      table.push_back({{"rank", nullptr}, {"eta", row.eta}, {"gamma", row.gamma}, {"score", nullptr},
                       {"status", "diverged"}, {"error", row.error}});
  r.json["metric"] = by_accuracy ? "terminal_accuracy" : "terminal_window_w2";
  r.json["grid"] = table;
  r.json["winner"] = {{"eta", ranked.front().eta}, {"gamma", ranked.front().gamma}};
  r.json["series"] = series;
  json curves = json::array();
  for (const auto& cv : r.curves) curves.push_back(curve_json(cv));
  r.json["curves"] = curves;
  r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

std::pair<Matrix, Vector> quadratic_target(const ExperimentConfig& c) {
  const DataSpec spec = parse_data_spec(c.data);
  if (spec.kind == "spectrum") {
    const auto q = synthetic_quadratic(static_cast<int>(spec.args[0]), spec.args[1], spec.args[2],
                                       static_cast<std::uint64_t>(spec.args[3]));
    return {q.A, q.b};
  }
  const Dataset ds = load_dataset(c, false);
  const auto q = quadratic_from_dataset(ds.X_train, ds.y_train, c.lambda_or_default());
  return {q.A(), q.b()};
}

}  // namespace

ExperimentReport run_order_study(const ExperimentConfig& c) {
  validate(c);
  const auto t0 = std::chrono::steady_clock::now();
  const auto [A, b] = quadratic_target(c);
  const QuadraticPotential q(A, b);
  const auto [m, L] = q.hessian_bounds();
  auto gamma_for = [&, m = m, L = L](int P) {
    if (!c.gamma_mult) return c.gamma;
    return *c.gamma_mult * build_certificate({P, m, L, std::nullopt, 0.5, c.convention}).gamma0;
  };
  const OrderStudy study = order_study(A, b, c.orders, c.eta_grid, gamma_for);
  ExperimentReport r;
  r.seeds = c.seeds;
  r.json = base_report(c);
  r.json["target"] = {{"A", matrix_json(A)}, {"b", vector_json(b)}, {"m", m}, {"L", L}};
  json pts = json::array();
  for (const auto& p : study.points) {
    json j{{"order", p.P}, {"eta", p.eta}, {"gamma", p.gamma}, {"spectral_radius", p.spectral_radius},
           {"contractive", p.contractive}};
    j["w2"] = p.contractive ? json(p.w2) : json(nullptr);
    if (!p.contractive) j["error"] = "NotContractive";
    pts.push_back(j);
  }
  r.json["points"] = pts;
  json slopes = json::array();
  for (const auto& s : study.slopes) {
    json j{{"order", s.P}};
    if (s.fit) {
      j["slope"] = s.fit->slope;
      j["intercept"] = s.fit->intercept;
      j["half_width95"] = std::isfinite(s.fit->half_width95) ? json(s.fit->half_width95) : json(nullptr);
    } else {
      j["slope"] = nullptr;
      j["error"] = s.error;
    }
    slopes.push_back(j);
  }
  r.json["slopes"] = slopes;
  json pairs = json::array();
  for (std::size_t i = 0; i < study.slopes.size(); ++i)
    for (std::size_t k = i + 1; k < study.slopes.size(); ++k) {
      const auto& a = study.slopes[i];
      const auto& bb = study.slopes[k];
      json j{{"lower", a.P}, {"higher", bb.P}};
      j["slope_difference"] =
          a.fit && bb.fit ? json(bb.fit->slope - a.fit->slope) : json(nullptr);
      pairs.push_back(j);
    }
  r.json["pairwise"] = pairs;
  r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ExperimentReport run_kernel_check(const ExperimentConfig& c) {
  validate(c);
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> gammas = c.gamma_grid.empty() ? std::vector<double>{0.5, 1, 2, 5} : c.gamma_grid;
  const std::vector<double> etas = c.eta_grid.empty() ? std::vector<double>{0.005, 0.011, 0.05, 0.1} : c.eta_grid;
  constexpr int kInstances = 5;
  auto rel = [](const auto& a, const auto& ref) { return (a - ref).norm() / std::max(ref.norm(), 1e-300); };

  struct Cell {
    double gamma, eta;
    int instance, d;
    std::vector<std::pair<std::string, double>> errors;
  };
  std::vector<Cell> cells;
  for (double g : gammas)
    for (double e : etas)
      for (int i = 0; i < kInstances; ++i) cells.push_back({g, e, i, 1 + i % 3, {}});
  parallel_for(cells.size(), [&](std::size_t idx) {
    Cell& cell = cells[idx];
    ChainRng rng(c.seeds.front(), 1000 + static_cast<std::uint64_t>(cell.instance));
    const int d = cell.d;
    Matrix G(d, d);
    for (int r = 0; r < d; ++r) G.row(r) = rng.normal_vector(d).transpose();
    const Matrix A = sym(G * G.transpose() / d + 0.5 * Matrix::Identity(d, d));
    const Vector b = rng.normal_vector(d);
    const Vector x = rng.normal_vector(c.P * d);
    const auto full = transition_quadratic(c.P, cell.gamma, cell.eta, A, b);
    const auto dec = transition_quadratic_decoupled(c.P, cell.gamma, cell.eta, A, b);
    const Vector m_full = full.T * x + full.c;
    cell.errors.emplace_back("decoupled_mean", rel(Vector(dec.T * x + dec.c), m_full));
    cell.errors.emplace_back("decoupled_covariance", rel(dec.Sigma, full.Sigma));
    cell.errors.emplace_back(
        "universal_covariance",
        rel(kron_identity(covariance_universal(c.P, cell.gamma, cell.eta), d), full.Sigma));
    if (c.P == 4) {
      cell.errors.emplace_back("closed_form_mean", rel(mean_quadratic(x, A, b, cell.gamma, cell.eta), m_full));
      cell.errors.emplace_back("closed_form_sigma",
                               rel(kron_identity(sigma_entries(cell.gamma, cell.eta), d), full.Sigma));
    }
  });
  auto tolerance = [](const std::string& name) { return name == "closed_form_mean" ? 1e-6 : 1e-8; };
  json matrix = json::array();
  bool ok = true;
  for (const auto& cell : cells) {
    json j{{"gamma", cell.gamma}, {"eta", cell.eta}, {"instance", cell.instance}, {"d", cell.d}};
    for (const auto& [name, err] : cell.errors) {
      const bool pass = err <= tolerance(name);
      ok = ok && pass;
      j[name] = {{"relative_error", err}, {"tolerance", tolerance(name)}, {"pass", pass}};
    }
    matrix.push_back(j);
  }
  ExperimentReport r;
  r.seeds = c.seeds;
  r.json = base_report(c);
  r.json["checks"] = matrix;
  r.json["ok"] = ok;
  r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ExperimentReport run_certificate(const ExperimentConfig& c) {
  validate(c);
  const auto t0 = std::chrono::steady_clock::now();
  CertificateInputs in;
  in.P = c.P;
  in.m = c.m;
  in.L = c.L;
  if (c.gamma_given) in.gamma = c.gamma;
  in.convention = c.convention;
  const auto cert = build_certificate(in);
  Matrix hess = Matrix::Zero(2, 2);
  hess(0, 0) = c.m;
  hess(1, 1) = c.L;
  const auto lmi = verify_contraction_lmi(cert, hess);
  ExperimentReport r;
  r.seeds = c.seeds;
  r.json = base_report(c);
  r.json["certificate"] = certificate_json(cert);
  r.json["lmi"] = {{"hessian_spectrum", {c.m, c.L}},
                   {"max_eigenvalue", lmi.max_eigenvalue},
                   {"m_norm", lmi.m_norm},
                   {"feasible", lmi.feasible}};
  r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ExperimentReport run_experiment(const ExperimentConfig& c) {
  switch (c.task) {
    case Task::Regression: return run_regression_experiment(c);
    case Task::Classification: return run_classification_experiment(c);
    case Task::GridSearch: return run_grid_search(c);
    case Task::OrderStudy: return run_order_study(c);
    case Task::KernelCheck: return run_kernel_check(c);
    case Task::Certificate: return run_certificate(c);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown task");
}

}  // namespace holmc::cli
