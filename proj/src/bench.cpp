#include "mvi/bench.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace mvi {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string num_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct SummaryRow {
  double epsilon;
  int iterations;
  double seconds;
  double final_residual;
  SolveStatus status;
};

void write_trace(const std::filesystem::path& path, const SolveReport& report,
                 const VIProblem& problem) {
  std::ofstream out(path);
  out << "n,residual_norm,error_to_solution,lambda,m,cumulative_seconds\n";
  double elapsed = 0.0;
  for (const IterationRecord& rec : report.trace) {
    elapsed += rec.wallclock;
    out << rec.n << ',' << num(rec.residual_norm) << ',';
    if (problem.known_solution) {
      out << num(dist(rec.x, *problem.known_solution));
    }
    out << ',' << num(rec.lambda) << ',' << rec.m << ',' << num(elapsed) << '\n';
  }
}

}  // namespace

std::string trace_filename(double epsilon) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "trace_%.0e.csv", epsilon);
  return buf;
}

int run_bench(const ExperimentConfig& config, std::ostream& log) {
  VIProblem problem;
  try {
    validate_config(config);
    problem = load_problem(config);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return 2;
  }
  if (static_cast<int>(config.x0.size()) != problem.dim ||
      static_cast<int>(config.x1.size()) != problem.dim) {
    log << "error: initial points do not match the problem dimension\n";
    return 2;
  }

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  const std::filesystem::path out_dir(config.out_dir);

  std::vector<SummaryRow> rows;
  bool all_converged = true;
  for (double eps : config.tolerances) {
    SolverParams params = config.params;
    params.epsilon = eps;

    SummaryRow row{eps, 0, 0.0, 0.0, SolveStatus::MaxIters};
    const auto t0 = std::chrono::steady_clock::now();
    const SolveReport report = solve(problem, params, config.x0, config.x1, config.selection);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    row.iterations = report.iterations;
    row.final_residual = report.final_residual;
    row.status = report.status;
    all_converged = all_converged && report.status == SolveStatus::Converged;

    write_trace(out_dir / trace_filename(eps), report, problem);
    log << to_string(config.kind) << " eps=" << num_short(eps) << ": "
        << to_string(row.status) << " in " << row.iterations << " iterations, residual "
        << num_short(row.final_residual) << ", " << num_short(row.seconds) << " s\n";
    rows.push_back(row);
  }

  std::ofstream summary(out_dir / "summary.csv");
  summary << "epsilon,iterations,seconds,final_residual,status\n";
  for (const SummaryRow& row : rows) {
    summary << num_short(row.epsilon) << ',' << row.iterations << ',' << num(row.seconds)
            << ',' << num(row.final_residual) << ',' << to_string(row.status) << '\n';
  }
  return all_converged ? 0 : 1;
}

}  // namespace mvi
