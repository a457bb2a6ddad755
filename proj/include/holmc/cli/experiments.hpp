#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holmc/cli/config.hpp"
#include "holmc/diagnostics.hpp"

namespace holmc::cli {

/// One series of curves.csv.
struct Curve {
  std::string series;
  std::string metric;  // "w2" or "accuracy"
  std::vector<long> checkpoints;
  std::vector<std::vector<double>> per_seed;  // [seed][checkpoint]
  std::vector<double> mean;
  std::vector<double> half_std;
};

struct ExperimentReport {
  nlohmann::ordered_json json;  // everything that goes to report.json
  std::vector<Curve> curves;    // everything that goes to curves.csv
  std::vector<std::uint64_t> seeds;
  double wall_clock_seconds = 0;  // written to timing.json so report.json stays byte-stable
};

/// Mean of the curve mean over the last `fraction` of its checkpoints (at least one).
double terminal_window_mean(const Curve& c, double fraction = 0.1);

/// Worker count: HOLMC_THREADS if set (≥1), otherwise the hardware concurrency.
unsigned worker_count();

/// Runs fn(0..n−1) on the worker pool. Rethrows the exception of the lowest failing index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

struct OrderPoint {
  int P = 0;
  double eta = 0;
  double gamma = 0;
  double spectral_radius = 0;
  bool contractive = false;
  double w2 = 0;  // W2(θ-marginal of the stationary law, Gibbs law); NaN if not contractive
};

struct OrderSlope {
  int P = 0;
  std::optional<SlopeFit> fit;  // empty when fewer than two contractive points
  std::string error;
};

struct OrderStudy {
  std::vector<OrderPoint> points;
  std::vector<OrderSlope> slopes;
};

/// Exact stationary law of the P-th order chain for each (P, η) against N(A⁻¹b, A⁻¹).
OrderStudy order_study(const Matrix& A, const Vector& b, const std::vector<int>& orders,
                       const std::vector<double>& etas,
                       const std::function<double(int)>& gamma_for_order);

ExperimentReport run_regression_experiment(const ExperimentConfig& c);
ExperimentReport run_classification_experiment(const ExperimentConfig& c);
ExperimentReport run_grid_search(const ExperimentConfig& c);
ExperimentReport run_order_study(const ExperimentConfig& c);
ExperimentReport run_kernel_check(const ExperimentConfig& c);
ExperimentReport run_certificate(const ExperimentConfig& c);
ExperimentReport run_experiment(const ExperimentConfig& c);

nlohmann::ordered_json certificate_json(const ContractionCertificate& cert);

/// report.json, curves.csv (when there are curves) and timing.json under out_dir.
void write_report(const ExperimentReport& r, const std::string& out_dir);

/// curves.csv body: checkpoint, series, mean, half_std, one column per seed.
std::string curves_csv(const ExperimentReport& r);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace holmc::cli
