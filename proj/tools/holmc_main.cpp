// Command-line front end. Exit codes: 0 ok, 1 experiment error, 2 usage error.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <iostream>

#include "holmc/cli/config.hpp"
#include "holmc/cli/experiments.hpp"
#include "holmc/errors.hpp"

namespace {

using holmc::cli::ExperimentConfig;

struct RawFlags {
  std::string init = "minimizer_zero";
  std::string convention = "theory";
  std::string w2_target = "posterior";
  std::string grid_task = "regression";
};

void register_options(CLI::App& app, ExperimentConfig& c, RawFlags& raw) {
  app.add_option("--order", c.P, "Order P of the dynamics")->capture_default_str();
  app.add_option("--eta", c.eta, "Step size")->capture_default_str();
  app.add_option("--gamma", c.gamma, "Friction")->capture_default_str();
  app.add_option("--gamma-mult", c.gamma_mult, "Order study: use this multiple of gamma0 per order");
  app.add_option("--lambda", c.lambda, "Ridge penalty (default 2 regression, 25 classification)");
  app.add_option("--noise-var", c.noise_var, "Noise variance of the posterior target (default n)");
  app.add_option("--prior-var", c.prior_var, "Prior variance of the posterior target (default 1/lambda)");
  app.add_option("--iters", c.N, "Iterations (default 1000 regression, 150 classification)");
  app.add_option("--seeds", c.seeds, "Comma-separated seeds")->delimiter(',')->capture_default_str();
  app.add_option("--data", c.data, "CSV path, synthetic(d,n,seed) or spectrum(d,m,L,seed)")
      ->capture_default_str();
  app.add_option("--target", c.target_column, "Target column (default: last)");
  app.add_option("--split", c.split, "Training fraction")->capture_default_str();
  app.add_flag("--standardize,!--no-standardize", c.standardize, "Standardize features on the training split")
      ->capture_default_str();
  app.add_flag("--intercept,!--no-intercept", c.intercept, "Append an intercept column")
      ->capture_default_str();
  app.add_option("--one-hot", c.one_hot, "Columns to one-hot encode")->delimiter(',');
  app.add_option("--init", raw.init, "minimizer_zero or standard_normal")->capture_default_str();
  app.add_option("--out", c.out, "Output directory")->capture_default_str();
  app.add_option("--eta-grid", c.eta_grid, "Comma-separated step sizes")->delimiter(',');
  app.add_option("--gamma-grid", c.gamma_grid, "Comma-separated frictions")->delimiter(',');
  app.add_option("--orders", c.orders, "Order study: comma-separated orders")->delimiter(',')
      ->capture_default_str();
  app.add_option("--convention", raw.convention, "kappa convention: theory or example-compat")
      ->capture_default_str();
  app.add_option("--w2-target", raw.w2_target, "Regression W2 target: posterior or gibbs")
      ->capture_default_str();
  app.add_option("--grid-task", raw.grid_task, "Grid search: regression or classification")
      ->capture_default_str();
  app.add_option("--m", c.m, "Certificate: strong convexity")->capture_default_str();
  app.add_option("--L", c.L, "Certificate: smoothness")->capture_default_str();
}

void print_summary(const holmc::cli::ExperimentReport& r, holmc::cli::Task task) {
  using holmc::cli::Task;
  if (task == Task::Certificate || task == Task::KernelCheck || task == Task::OrderStudy) {
    std::cout << r.json.dump(2) << "\n";
    return;
  }
  if (r.json.contains("series"))
    for (const auto& s : r.json["series"]) {
      std::cout << s["name"].get<std::string>();
      if (s.contains("terminal_window_w2"))
        std::cout << "  initial W2 " << s["initial_w2"] << "  terminal-window W2 " << s["terminal_window_w2"];
      if (s.contains("terminal_accuracy")) std::cout << "  terminal accuracy " << s["terminal_accuracy"];
      std::cout << "\n";
    }
  if (r.json.contains("winner")) std::cout << "winner " << r.json["winner"].dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("holmc"));

  CLI::App app{"High-order Langevin Monte Carlo samplers"};
  app.set_config("--config", "", "Flat key=value config file; flags override it");
  app.require_subcommand(1);
  ExperimentConfig cfg;
  RawFlags raw;
  register_options(app, cfg, raw);
  const std::vector<std::pair<std::string, std::string>> tasks = {
      {"certificate", "Contraction certificate for order P"},
      {"kernel-check", "Closed-form kernel against the stacked oracle"},
      {"regression", "Bayesian linear regression with W2 curves"},
      {"classification", "Bayesian logistic regression with accuracy curves"},
      {"grid-search", "Rank (eta, gamma) grid points"},
      {"order-study", "Stationary bias against step size per order"}};
  for (const auto& [name, desc] : tasks) app.add_subcommand(name, desc)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.task = holmc::cli::parse_task(app.get_subcommands().front()->get_name());
    cfg.gamma_given = app.count("--gamma") > 0;
    cfg.init = holmc::parse_init_policy(raw.init);
    cfg.convention = holmc::parse_kappa_convention(raw.convention);
    if (raw.w2_target == "posterior")
      cfg.w2_target = holmc::cli::W2Target::Posterior;
    else if (raw.w2_target == "gibbs")
      cfg.w2_target = holmc::cli::W2Target::Gibbs;
    else
      throw holmc::Error(holmc::ErrorKind::InvalidArgument, "unknown W2 target '" + raw.w2_target + "'");
    cfg.grid_task = holmc::cli::parse_task(raw.grid_task);
    holmc::cli::validate(cfg);
  } catch (const holmc::Error& e) {
    spdlog::error("{}", e.what());
    return 2;
  }

  try {
    const auto report = holmc::cli::run_experiment(cfg);
    holmc::cli::write_report(report, cfg.out);
    print_summary(report, cfg.task);
    if (!report.json.value("ok", true)) return 1;
  } catch (const holmc::Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
