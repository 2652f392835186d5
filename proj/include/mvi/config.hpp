#pragma once

#include <string>
#include <vector>

#include "mvi/problem.hpp"

namespace mvi {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ProblemKind { Example41, Example42, Custom };

/// One benchmark run: a problem, solver parameters, initial points and a
/// strictly decreasing list of stopping tolerances to sweep.
struct ExperimentConfig {
  ProblemKind kind = ProblemKind::Example41;
  std::string problem_file;  // Custom only
  SolverParams params;
  Point x0, x1;
  SelectionContext selection;
  std::vector<double> tolerances;
  std::string out_dir = ".";
};

/// Built-in defaults (parameters, initial points, tolerance sweep) for the
/// two bundled problems. Custom starts from neutral parameter defaults and
/// requires x0/x1 and eps_list keys.
ExperimentConfig default_config(ProblemKind kind);

/// Parse a `key value` text config (one pair per line, `#` comments, an
/// optional `=` between key and value). Keys override the defaults implied
/// by the mandatory `problem` key. Throws ConfigError.
ExperimentConfig parse_config(const std::string& path);

/// Check the config invariants (non-empty strictly decreasing tolerance list,
/// parameter ranges, initial points present). Throws ConfigError.
void validate_config(const ExperimentConfig& config);

/// Instantiate the configured problem (built-in example or a custom problem
/// file with a box/hyperplane-box set and an interval-affine map).
VIProblem load_problem(const ExperimentConfig& config);

const char* to_string(ProblemKind kind);
SelectionStrategy parse_strategy(const std::string& name);

}  // namespace mvi
