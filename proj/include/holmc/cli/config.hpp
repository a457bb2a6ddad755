#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holmc/certificate.hpp"
#include "holmc/sampler.hpp"

namespace holmc::cli {

enum class Task { Regression, Classification, GridSearch, OrderStudy, KernelCheck, Certificate };

Task parse_task(const std::string& s);
std::string to_string(Task t);

/// Which law the regression W2 curve is measured against.
enum class W2Target { Posterior, Gibbs };

struct ExperimentConfig {
  Task task = Task::Regression;
  Task grid_task = Task::Regression;  // what grid-search evaluates
  int P = 4;
  double eta = 0.011;
  double gamma = 1.0;
  bool gamma_given = false;  // certificate: γ = γ₀ unless given
  std::optional<double> gamma_mult;  // order study: γ = gamma_mult·γ₀(P) when set
  std::optional<double> lambda;      // default 2 (regression) or 25 (classification)
  std::optional<double> noise_var;   // default n, which makes the posterior the Gibbs law
  std::optional<double> prior_var;   // default 1/λ
  std::optional<long> N;             // default 1000 (regression) or 150 (classification)
  std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::string data = "synthetic(4,500,0)";
  std::string target_column;  // empty: last column
  double split = 0.7;
  bool standardize = true;
  bool intercept = false;
  std::vector<std::string> one_hot;
  InitPolicy init = InitPolicy::MinimizerZero;
  std::string out = ".";
  std::vector<double> eta_grid;
  std::vector<double> gamma_grid;
  std::vector<int> orders = {3, 4};  // order study
  KappaConvention convention = KappaConvention::Theory;
  W2Target w2_target = W2Target::Posterior;
  double m = 1.0, L = 1.0;  // certificate subcommand

  double lambda_or_default() const;
  long iterations() const;
};

/// Rejects invalid explicit values (never substitutes defaults). Throws InvalidArgument.
void validate(const ExperimentConfig& c);

nlohmann::ordered_json to_json(const ExperimentConfig& c);

}  // namespace holmc::cli
