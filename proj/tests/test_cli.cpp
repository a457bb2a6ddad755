#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "holmc/cli/config.hpp"
#include "holmc/cli/data.hpp"
#include "holmc/cli/experiments.hpp"
#include "holmc/diagnostics.hpp"
#include "holmc/errors.hpp"
#include "holmc/sampler.hpp"

using namespace holmc;
using namespace holmc::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("holmc_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write_file(const fs::path& p, const std::string& body) {
  std::ofstream(p) << body;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

ExperimentConfig small_regression() {
  ExperimentConfig c;
  c.task = Task::Regression;
  c.data = "synthetic(2,60,3)";
  c.N = 80;
  c.seeds = {0, 1, 2};
  return c;
}

}  // namespace

TEST(Csv, TwoByTwoExample) {
  const auto dir = scratch("csv2");
  const auto p = write_file(dir / "t.csv", "a,y\n1.5,2\n-0.5,3\n");
  IngestOptions opt;
  opt.standardize = false;
  opt.split = 0.5;
  auto ds = ingest_csv(p.string(), opt);
  EXPECT_EQ(ds.X_train.rows() + ds.X_test.rows(), 2);
  EXPECT_EQ(ds.X_train.cols(), 1);
  EXPECT_EQ(ds.y_train.size() + ds.y_test.size(), 2);
  opt.intercept = true;
  ds = ingest_csv(p.string(), opt);
  EXPECT_EQ(ds.X_train.cols(), 2);
  EXPECT_EQ(ds.X_train(0, 1), 1.0);
}

TEST(Csv, QuotesAndConstantColumn) {
  const auto dir = scratch("csvconst");
  std::string body = "\xEF\xBB\xBFx,\"const\",y\n";
  for (int i = 0; i < 20; ++i) body += std::to_string(i) + ",\"7\"," + std::to_string(i % 3) + "\n";
  const auto p = write_file(dir / "t.csv", body);
  const auto ds = ingest_csv(p.string(), IngestOptions{});
  EXPECT_EQ(ds.feature_names, (std::vector<std::string>{"x"}));
  EXPECT_EQ(ds.dropped, (std::vector<std::string>{"const"}));
}

TEST(Csv, Errors) {
  const auto dir = scratch("csverr");
  const auto ok = write_file(dir / "ok.csv", "a,b,y\n1,2,3\n4,5,6\n7,8,9\n");
  IngestOptions opt;
  opt.target_column = "nope";
  EXPECT_EQ(kind_of([&] { ingest_csv(ok.string(), opt); }), ErrorKind::MissingColumn);
  const auto bad = write_file(dir / "bad.csv", "a,b,y\n1,2,3\n4,oops,6\n7,8,9\n");
  try {
    ingest_csv(bad.string(), IngestOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonNumericCell);
    const std::string what = e.what();
    EXPECT_NE(what.find("row 2"), std::string::npos) << what;
    EXPECT_NE(what.find("'b'"), std::string::npos) << what;
  }
  const auto empty = write_file(dir / "empty.csv", "a,y\n");
  EXPECT_EQ(kind_of([&] { ingest_csv(empty.string(), IngestOptions{}); }), ErrorKind::EmptyFile);
  const auto nothing = write_file(dir / "nothing.csv", "");
  EXPECT_EQ(kind_of([&] { ingest_csv(nothing.string(), IngestOptions{}); }), ErrorKind::EmptyFile);
}

TEST(Csv, OneHotEncoding) {
  RawTable t;
  t.header = {"c", "x", "y"};
  t.cells = {{"red", "1", "0"}, {"blue", "2", "1"}, {"red", "3", "1"}};
  const auto out = one_hot(t, {"c"});
  EXPECT_EQ(out.header, (std::vector<std::string>{"c=blue", "c=red", "x", "y"}));
  EXPECT_EQ(out.cells[0], (std::vector<std::string>{"0", "1", "1", "0"}));
  EXPECT_EQ(kind_of([&] { one_hot(t, {"missing"}); }), ErrorKind::MissingColumn);
}

TEST(Csv, TwoLevelStringTargetIsMapped) {
  RawTable t;
  t.header = {"x", "label"};
  t.cells = {{"1", "yes"}, {"2", "no"}, {"3", "yes"}};
  const auto n = to_numeric(t, "label");
  EXPECT_EQ(n.values(0, 1), 1.0);
  EXPECT_EQ(n.values(1, 1), 0.0);
}

TEST(Synthetic, PosteriorCoversTrueCoefficients) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const auto s = synthetic_regression(4, 500, seed);
    const auto post = ridge_posterior(s.X, s.y, 1.0, 10.0);
    for (int i = 0; i < 4; ++i)
      EXPECT_LE(std::abs(post.mean(i) - s.theta_true(i)), 3 * std::sqrt(post.covariance(i, i)));
  }
}

TEST(Synthetic, DataSpecParsing) {
  const auto s = parse_data_spec("synthetic(4,500,0)");
  EXPECT_EQ(s.kind, "synthetic");
  EXPECT_EQ(s.args, (std::vector<double>{4, 500, 0}));
  EXPECT_EQ(parse_data_spec("spectrum(4,0.5,2,1)").kind, "spectrum");
  EXPECT_EQ(parse_data_spec("data/air.csv").kind, "csv");
  EXPECT_THROW(parse_data_spec("synthetic(4,500)"), Error);
  const auto q = synthetic_quadratic(4, 0.5, 2.0, 1);
  const Vector ev = Eigen::SelfAdjointEigenSolver<Matrix>(q.A).eigenvalues();
  EXPECT_NEAR(ev(0), 0.5, 1e-12);
  EXPECT_NEAR(ev(3), 2.0, 1e-12);
}

TEST(Ingest, StandardizationUsesTrainingRowsOnly) {
  // y holds the original row index, so the train/test membership can be recovered.
  const int n = 40;
  Matrix X(n, 2);
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = i * i * 0.1;
    X(i, 1) = std::sin(i);
    y(i) = i;
  }
  IngestOptions opt;
  opt.shuffle_seed = 5;
  const auto ds = prepare(table_from(X, y), opt);
  ASSERT_EQ(ds.X_train.rows(), 28);
  for (int j = 0; j < 2; ++j) {
    Eigen::VectorXd col(ds.y_train.size());
    for (Eigen::Index r = 0; r < col.size(); ++r) col(r) = X(static_cast<int>(ds.y_train(r)), j);
    const double mu = col.mean();
    const double sd = std::sqrt((col.array() - mu).square().mean());
    for (Eigen::Index r = 0; r < ds.X_train.rows(); ++r)
      EXPECT_NEAR(ds.X_train(r, j), (X(static_cast<int>(ds.y_train(r)), j) - mu) / sd, 1e-12);
    for (Eigen::Index r = 0; r < ds.X_test.rows(); ++r)
      EXPECT_NEAR(ds.X_test(r, j), (X(static_cast<int>(ds.y_test(r)), j) - mu) / sd, 1e-12);
  }
}

TEST(Config, RejectsInvalidExplicitValues) {
  ExperimentConfig c;
  EXPECT_NO_THROW(validate(c));
  c.split = 1.5;
  EXPECT_EQ(kind_of([&] { validate(c); }), ErrorKind::InvalidArgument);
  c = ExperimentConfig{};
  c.eta = -0.1;
  EXPECT_THROW(validate(c), Error);
  c = ExperimentConfig{};
  c.task = Task::GridSearch;
  EXPECT_THROW(validate(c), Error);
  c = ExperimentConfig{};
  c.seeds.clear();
  EXPECT_THROW(validate(c), Error);
  c = ExperimentConfig{};
  c.task = Task::Classification;
  EXPECT_EQ(c.lambda_or_default(), 25.0);
  EXPECT_EQ(c.iterations(), 150);
  c.task = Task::Regression;
  EXPECT_EQ(c.lambda_or_default(), 2.0);
  EXPECT_EQ(c.iterations(), 1000);
}

TEST(Report, CurvesCsvAndJsonLayout) {
  const auto c = small_regression();
  const auto r = run_regression_experiment(c);
  const std::string csv = curves_csv(r);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "checkpoint,series,mean,half_std,seed_0,seed_1,seed_2");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6) << line;
  }
  ASSERT_EQ(r.curves.size(), 1u);
  EXPECT_EQ(rows, r.curves[0].checkpoints.size());
  for (const char* key : {"config", "versions", "dataset", "target", "certificate", "series", "curves"})
    EXPECT_TRUE(r.json.contains(key)) << key;
  const auto& s = r.json["series"][0];
  for (const char* key : {"initial_w2", "terminal_window_w2", "rng_fingerprints", "chain_theta_mean"})
    EXPECT_TRUE(s.contains(key)) << key;
  EXPECT_EQ(s["rng_fingerprints"].size(), 3u);
  EXPECT_EQ(r.json["config"]["iters"], 80);
}

TEST(Report, IdenticalRunsAreByteIdentical) {
  auto c = small_regression();
  const auto a = scratch("rep_a"), b = scratch("rep_b");
  write_report(run_experiment(c), a.string());
  write_report(run_experiment(c), b.string());
  EXPECT_EQ(slurp(a / "report.json"), slurp(b / "report.json"));
  EXPECT_EQ(slurp(a / "curves.csv"), slurp(b / "curves.csv"));
  EXPECT_TRUE(fs::exists(a / "timing.json"));
  EXPECT_FALSE(slurp(a / "report.json").empty());
}

TEST(Regression, UnstableStepReportsEta) {
  auto c = small_regression();
  c.eta = 5.0;
  try {
    run_regression_experiment(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotContractive);
    EXPECT_NE(std::string(e.what()).find("eta=5"), std::string::npos) << e.what();
  }
}

TEST(GridSearch, SinglePointDivergedAndAllFailed) {
  auto c = small_regression();
  c.task = Task::GridSearch;
  c.eta_grid = {0.011};
  c.gamma_grid = {1.0};
  auto r = run_grid_search(c);
  EXPECT_EQ(r.json["grid"].size(), 1u);
  EXPECT_EQ(r.json["grid"][0]["rank"], 1);
  EXPECT_EQ(r.json["winner"]["eta"], 0.011);

  c.eta_grid = {0.011, 50.0};
  r = run_grid_search(c);
  ASSERT_EQ(r.json["grid"].size(), 2u);
  EXPECT_EQ(r.json["grid"][1]["status"], "diverged");
  EXPECT_TRUE(r.json["grid"][1]["rank"].is_null());
  EXPECT_EQ(r.json["winner"]["eta"], 0.011);

  c.eta_grid = {50.0};
  EXPECT_EQ(kind_of([&] { run_grid_search(c); }), ErrorKind::AllConfigsFailed);
}

TEST(GridSearch, TiesPreferSmallerEta) {
  auto c = small_regression();
  c.task = Task::GridSearch;
  c.eta_grid = {0.02, 0.011};
  c.gamma_grid = {1.0};
  const auto r = run_grid_search(c);
  const auto& g = r.json["grid"];
  EXPECT_LE(g[0]["score"].get<double>(), g[1]["score"].get<double>());
}

TEST(OrderStudy, SingleStepSizeLeavesSlopeUndefined) {
  ExperimentConfig c;
  c.task = Task::OrderStudy;
  c.data = "spectrum(2,0.5,2,0)";
  c.eta_grid = {0.05};
  c.gamma = 2.0;
  const auto r = run_order_study(c);
  for (const auto& s : r.json["slopes"]) {
    EXPECT_TRUE(s["slope"].is_null());
    EXPECT_TRUE(s.contains("error"));
  }
  EXPECT_EQ(r.json["points"].size(), 2u);
}

TEST(OrderStudy, NearZeroPotentialLine) {
  // A = εI: the Gibbs law is very wide; every point is still evaluated or flagged.
  Matrix A = 0.05 * Matrix::Identity(2, 2);
  const auto study = order_study(A, Vector::Zero(2), {3, 4}, {0.02, 0.04}, [](int) { return 1.0; });
  EXPECT_EQ(study.points.size(), 4u);
  for (const auto& p : study.points) {
    EXPECT_GT(p.spectral_radius, 0.9);
    if (p.contractive) {
      EXPECT_TRUE(std::isfinite(p.w2));
    }
  }
}

TEST(Classification, SeparableDataIsLearned) {
  ExperimentConfig c;
  c.task = Task::Classification;
  c.data = "synthetic(3,500,0)";
  c.seeds = {0, 1, 2};
  const auto r = run_classification_experiment(c);
  EXPECT_GE(r.json["series"][0]["terminal_accuracy"].get<double>(), 0.9);
  EXPECT_EQ(r.curves[0].metric, "accuracy");
}

TEST(Classification, HugePenaltyShrinksTowardsZero) {
  // At the default step the ridge term alone makes the step unstable; the run reports it.
  ExperimentConfig c;
  c.task = Task::Classification;
  c.data = "synthetic(3,500,0)";
  c.seeds = {0};
  c.lambda = 1e6;
  EXPECT_EQ(kind_of([&] { run_classification_experiment(c); }), ErrorKind::NotContractive);

  // With a stable step the chain stays within a few prior sd (1e-3) of the origin.
  const auto s = synthetic_classification(3, 500, 0);
  auto pot = std::make_shared<LogisticPotential>(s.X, s.y, 1e6);
  const Kernel4Provider prov(pot, 1.0, 1e-4);
  ChainConfig cfg;
  cfg.N = 150;
  cfg.eta = 1e-4;
  const auto t = run_chain(prov, cfg, *pot);
  const Vector theta_bar = t.theta().colwise().mean().transpose();
  EXPECT_LT(theta_bar.norm(), 1e-2);
  // Exactly zero parameters predict class 1 everywhere (ties go to 1).
  Matrix zero = Matrix::Zero(1, 3);
  EXPECT_DOUBLE_EQ(classification_accuracy(zero, s.X, s.y, {1})[0], s.y.mean());
}

TEST(Certificate, JsonCarriesConstants) {
  ExperimentConfig c;
  c.task = Task::Certificate;
  c.m = 0.5;
  c.L = 2.0;
  const auto r = run_certificate(c);
  const auto& cert = r.json["certificate"];
  EXPECT_EQ(cert["P"], 4);
  EXPECT_EQ(cert["H"].size(), 3u);
  EXPECT_GT(cert["gamma0"].get<double>(), 0.0);
  EXPECT_TRUE(r.json["lmi"]["feasible"].get<bool>());
}

TEST(KernelCheck, PassesAtFourthOrder) {
  ExperimentConfig c;
  c.task = Task::KernelCheck;
  c.seeds = {0};
  EXPECT_TRUE(run_kernel_check(c).json["ok"].get<bool>());
}

TEST(Pool, LowestFailingIndexWins) {
  std::vector<int> seen(64, 0);
  parallel_for(seen.size(), [&](std::size_t i) { seen[i] = 1; });
  EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), 64);
  try {
    parallel_for(64, [](std::size_t i) {
      if (i == 7 || i == 40) throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(i));
    });
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("index 7"), std::string::npos) << e.what();
  }
}

TEST(Curve, TerminalWindowMean) {
  Curve cv;
  cv.mean = {5, 4, 3, 2, 1, 1, 1, 1, 1, 0};
  EXPECT_DOUBLE_EQ(terminal_window_mean(cv), 0.0);
  cv.mean = {2.0};
  EXPECT_DOUBLE_EQ(terminal_window_mean(cv), 2.0);
}
