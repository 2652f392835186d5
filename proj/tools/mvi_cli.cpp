// Command-line harness: config-driven solves, built-in benchmark sweeps and
// the brute-force solution verifier.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvi/bench.hpp"
#include "mvi/examples.hpp"
#include "mvi/verify.hpp"

namespace {

mvi::Point parse_point(const std::string& csv) {
  mvi::Point p;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    p.push_back(std::stod(item));
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and benchmark harness for set-valued variational inequalities"};
  app.require_subcommand(1);

  // solve --config <file>
  std::string config_path;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run the sweep described by a config file");
  solve_cmd->add_option("--config", config_path, "Path to the experiment config")->required();

  // bench --example {41|42} [--eps-list ...] [--seed N] [--out DIR]
  int example = 41;
  std::vector<double> eps_list;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string selection = "midpoint";
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a built-in example sweep");
  bench_cmd->add_option("--example", example, "Built-in example: 41 or 42")
      ->check(CLI::IsMember({41, 42}))
      ->required();
  bench_cmd->add_option("--eps-list", eps_list, "Tolerances to sweep (default: the example's)");
  bench_cmd->add_option("--seed", seed, "Seed for the SeededRandom selection strategy");
  bench_cmd->add_option("--out", out_dir, "Output directory for summary.csv and traces");
  bench_cmd->add_option("--selection", selection,
                        "Selection strategy: midpoint|lower|upper|random");

  // verify --example {41|42} --point x1,x2,... [--samples N] [--serial]
  std::string point_csv;
  int samples = 10'000;
  bool serial = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a candidate solution point");
  verify_cmd->add_option("--example", example, "Built-in example: 41 or 42")
      ->check(CLI::IsMember({41, 42}))
      ->required();
  verify_cmd->add_option("--point", point_csv, "Candidate point, comma-separated")->required();
  verify_cmd->add_option("--samples", samples, "Number of sampled feasible directions");
  verify_cmd->add_option("--seed", seed, "Sampling seed");
  verify_cmd->add_flag("--serial", serial, "Use the single-threaded reference verifier");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      mvi::ExperimentConfig cfg;
      try {
        cfg = mvi::parse_config(config_path);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
      }
      return mvi::run_bench(cfg, std::cout);
    }

    if (*bench_cmd) {
      mvi::ExperimentConfig cfg = mvi::default_config(
          example == 41 ? mvi::ProblemKind::Example41 : mvi::ProblemKind::Example42);
      if (!eps_list.empty()) cfg.tolerances = eps_list;
      cfg.selection.strategy = mvi::parse_strategy(selection);
      cfg.selection.seed = seed;
      cfg.out_dir = out_dir;
      return mvi::run_bench(cfg, std::cout);
    }

    if (*verify_cmd) {
      const mvi::VIProblem problem =
          example == 41 ? mvi::build_example41() : mvi::build_example42();
      const mvi::Point x = parse_point(point_csv);
      const mvi::VerifyResult r = serial
                                      ? mvi::verify_solution_serial(problem, x, samples, seed)
                                      : mvi::verify_solution(problem, x, samples, seed);
      std::printf("%s (worst violation %.3e over %d samples)\n", r.pass ? "PASS" : "FAIL",
                  r.worst_violation, samples);
      return r.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
