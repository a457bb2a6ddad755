#include "holmc/cli/config.hpp"

#include <cmath>

#include "holmc/errors.hpp"

namespace holmc::cli {

Task parse_task(const std::string& s) {
  if (s == "regression") return Task::Regression;
  if (s == "classification") return Task::Classification;
  if (s == "grid-search") return Task::GridSearch;
  if (s == "order-study") return Task::OrderStudy;
  if (s == "kernel-check") return Task::KernelCheck;
  if (s == "certificate") return Task::Certificate;
  throw Error(ErrorKind::InvalidArgument, "unknown task '" + s + "'");
}

std::string to_string(Task t) {
  switch (t) {
    case Task::Regression: return "regression";
    case Task::Classification: return "classification";
    case Task::GridSearch: return "grid-search";
    case Task::OrderStudy: return "order-study";
    case Task::KernelCheck: return "kernel-check";
    case Task::Certificate: return "certificate";
  }
  return "unknown";
}

double ExperimentConfig::lambda_or_default() const {
  if (lambda) return *lambda;
  const Task t = task == Task::GridSearch ? grid_task : task;
  return t == Task::Classification ? 25.0 : 2.0;
}

long ExperimentConfig::iterations() const {
  if (N) return *N;
  const Task t = task == Task::GridSearch ? grid_task : task;
  return t == Task::Classification ? 150 : 1000;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

bool positive(double v) { return std::isfinite(v) && v > 0; }

}  // namespace

void validate(const ExperimentConfig& c) {
  require(c.P >= 3, "order must be at least 3");
  require(positive(c.eta), "eta must be positive");
  require(positive(c.gamma), "gamma must be positive");
  if (c.gamma_mult) require(positive(*c.gamma_mult), "gamma multiplier must be positive");
  if (c.lambda) require(std::isfinite(*c.lambda) && *c.lambda >= 0, "lambda must be non-negative");
  if (c.noise_var) require(positive(*c.noise_var), "noise variance must be positive");
  if (c.prior_var) require(positive(*c.prior_var), "prior variance must be positive");
  if (c.N) require(*c.N >= 1, "iterations must be at least 1");
  require(!c.seeds.empty(), "at least one seed is required");
  require(c.split > 0 && c.split < 1, "split must lie strictly between 0 and 1");
  for (double e : c.eta_grid) require(positive(e), "eta grid entries must be positive");
  for (double g : c.gamma_grid) require(positive(g), "gamma grid entries must be positive");
  if (c.task == Task::GridSearch) {
    require(!c.eta_grid.empty() && !c.gamma_grid.empty(), "grid search needs --eta-grid and --gamma-grid");
    require(c.grid_task == Task::Regression || c.grid_task == Task::Classification,
            "grid search evaluates regression or classification");
  }
  if (c.task == Task::OrderStudy) {
    require(!c.eta_grid.empty(), "order study needs --eta-grid");
    require(!c.orders.empty(), "order study needs at least one order");
    for (int P : c.orders) require(P >= 3 && P <= 6, "order study supports orders 3 to 6");
  }
  if (c.task == Task::Certificate) {
    require(positive(c.m), "m must be positive");
    require(std::isfinite(c.L) && c.L >= c.m, "L must be at least m");
  }
  // The regression target needs λ > 0 unless an explicit prior variance is given.
  if (c.task == Task::Regression && !c.prior_var)
    require(c.lambda_or_default() > 0, "lambda must be positive when --prior-var is not given");
}

nlohmann::ordered_json to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["task"] = to_string(c.task);
  if (c.task == Task::GridSearch) j["grid_task"] = to_string(c.grid_task);
  j["order"] = c.P;
  j["eta"] = c.eta;
  j["gamma"] = c.gamma;
  j["gamma_mult"] = c.gamma_mult ? nlohmann::ordered_json(*c.gamma_mult) : nullptr;
  j["lambda"] = c.lambda_or_default();
  j["noise_var"] = c.noise_var ? nlohmann::ordered_json(*c.noise_var) : nullptr;
  j["prior_var"] = c.prior_var ? nlohmann::ordered_json(*c.prior_var) : nullptr;
  j["iters"] = c.iterations();
  j["seeds"] = c.seeds;
  j["data"] = c.data;
  j["target"] = c.target_column;
  j["split"] = c.split;
  j["standardize"] = c.standardize;
  j["intercept"] = c.intercept;
  j["one_hot"] = c.one_hot;
  j["init"] = to_string(c.init);
  j["eta_grid"] = c.eta_grid;
  j["gamma_grid"] = c.gamma_grid;
  j["orders"] = c.orders;
  j["convention"] = to_string(c.convention);
  j["w2_target"] = c.w2_target == W2Target::Posterior ? "posterior" : "gibbs";
  j["m"] = c.m;
  j["L"] = c.L;
  return j;
}

}  // namespace holmc::cli
