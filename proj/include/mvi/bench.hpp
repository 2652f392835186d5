#pragma once

#include <iosfwd>

#include "mvi/config.hpp"
#include "mvi/solver.hpp"

namespace mvi {

/// Run the tolerance sweep described by the config. For every epsilon, solves
/// the problem, appends one row to <out>/summary.csv
/// (columns: epsilon,iterations,seconds,final_residual,status) and writes a
/// per-iteration <out>/trace_<eps>.csv
/// (columns: n,residual_norm,error_to_solution,lambda,m,cumulative_seconds).
///
/// Returns 0 when every run converged, 1 otherwise (solver failures are
/// recorded in their row), 2 on an invalid config or problem file.
int run_bench(const ExperimentConfig& config, std::ostream& log);

/// Label used for a sweep entry's trace file: trace_<eps>.csv.
std::string trace_filename(double epsilon);

}  // namespace mvi
