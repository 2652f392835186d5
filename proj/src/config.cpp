#include "mvi/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "mvi/examples.hpp"
#include "mvi/feasibility.hpp"
#include "mvi/solver.hpp"

namespace mvi {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for '" + key + "': " + value);
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer value for '" + key + "': " + value);
  }
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_double(key, item));
  }
  return out;
}

// `key value` pairs, '#' comments, optional '=' separator.
std::map<std::string, std::string> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::map<std::string, std::string> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t split = line.find_first_of(" \t=");
    if (split == std::string::npos) {
      throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                        ": expected 'key value'");
    }
    const std::string key = lower(line.substr(0, split));
    std::string value = trim(line.substr(split));
    if (!value.empty() && value.front() == '=') value = trim(value.substr(1));
    if (value.empty()) {
      throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                        ": missing value for '" + key + "'");
    }
    if (pairs.count(key)) {
      throw ConfigError("config: duplicate key '" + key + "'");
    }
    pairs[key] = value;
  }
  return pairs;
}

ValidationMode parse_validation(const std::string& value) {
  const std::string v = lower(value);
  if (v == "strict") return ValidationMode::Strict;
  if (v == "warn") return ValidationMode::Warn;
  if (v == "off") return ValidationMode::Off;
  throw ConfigError("config: unknown validation mode '" + value + "'");
}

VIProblem load_custom_problem(const std::string& path) {
  auto pairs = read_pairs(path);
  const auto take = [&](const char* key) -> std::string {
    auto it = pairs.find(key);
    if (it == pairs.end()) throw ConfigError("problem file: missing key '" + std::string(key) + "'");
    std::string v = it->second;
    pairs.erase(it);
    return v;
  };
  const auto take_optional = [&](const char* key) -> std::string {
    auto it = pairs.find(key);
    if (it == pairs.end()) return {};
    std::string v = it->second;
    pairs.erase(it);
    return v;
  };

  VIProblem p;
  p.dim = static_cast<int>(parse_long("dim", take("dim")));
  if (p.dim < 1) throw ConfigError("problem file: dim must be >= 1");

  const Point lo = parse_list("lo", take("lo"));
  const Point hi = parse_list("hi", take("hi"));
  if (static_cast<int>(lo.size()) != p.dim || static_cast<int>(hi.size()) != p.dim) {
    throw ConfigError("problem file: lo/hi must have length dim");
  }
  const std::string set_kind = lower(take("set"));
  if (set_kind == "box") {
    p.set = box_set(lo, hi);
  } else if (set_kind == "hyperplane_box") {
    p.set = hyperplane_box_set(lo, hi, parse_double("rhs", take("rhs")));
  } else {
    throw ConfigError("problem file: unknown set '" + set_kind + "'");
  }
  p.sample_lo = lo;
  p.sample_hi = hi;

  const std::string map_kind = lower(take("map"));
  if (map_kind != "affine_interval") {
    throw ConfigError("problem file: unknown map '" + map_kind + "'");
  }
  // A(x) = { M x + q + t d : t in [t_lo, t_hi] }; rows of M are ';'-separated.
  std::vector<Point> rows;
  {
    std::stringstream ss(take("m"));
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_list("m", row));
  }
  if (static_cast<int>(rows.size()) != p.dim) {
    throw ConfigError("problem file: M must have dim rows");
  }
  for (const Point& r : rows) {
    if (static_cast<int>(r.size()) != p.dim) {
      throw ConfigError("problem file: M rows must have dim entries");
    }
  }
  const Point q = parse_list("q", take("q"));
  const Point d = parse_list("d", take("d"));
  if (static_cast<int>(q.size()) != p.dim || static_cast<int>(d.size()) != p.dim) {
    throw ConfigError("problem file: q/d must have length dim");
  }
  const double t_lo = parse_double("t_lo", take("t_lo"));
  const double t_hi = parse_double("t_hi", take("t_hi"));
  if (!(t_lo <= t_hi)) throw ConfigError("problem file: t_lo > t_hi");

  p.map = interval_map(
      [rows, q](const Point& x) {
        Point b = q;
        for (std::size_t i = 0; i < rows.size(); ++i) b[i] += dot(rows[i], x);
        return b;
      },
      d, t_lo, t_hi, "A(x) = {M x + q + t d : t in [" + std::to_string(t_lo) + ", " +
                         std::to_string(t_hi) + "]}");

  const std::string known = take_optional("known_solution");
  if (!known.empty()) {
    Point xs = parse_list("known_solution", known);
    if (static_cast<int>(xs.size()) != p.dim) {
      throw ConfigError("problem file: known_solution must have length dim");
    }
    p.known_solution = std::move(xs);
  }
  if (!pairs.empty()) {
    throw ConfigError("problem file: unknown key '" + pairs.begin()->first + "'");
  }
  return p;
}

}  // namespace

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Example41: return "example41";
    case ProblemKind::Example42: return "example42";
    case ProblemKind::Custom: return "custom";
  }
  return "?";
}

SelectionStrategy parse_strategy(const std::string& name) {
  const std::string v = lower(name);
  if (v == "midpoint") return SelectionStrategy::Midpoint;
  if (v == "lower" || v == "lowerend") return SelectionStrategy::LowerEnd;
  if (v == "upper" || v == "upperend") return SelectionStrategy::UpperEnd;
  if (v == "random" || v == "seededrandom") return SelectionStrategy::SeededRandom;
  throw ConfigError("config: unknown selection strategy '" + name + "'");
}

ExperimentConfig default_config(ProblemKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ProblemKind::Example41:
      cfg.params.mu = 0.98;
      cfg.params.gamma = 0.91;
      cfg.params.alpha = 0.03;
      cfg.x0 = {10.0, 10.0};
      cfg.x1 = {10.0, 10.0};
      cfg.tolerances = {1e-1, 1e-2, 1e-3, 1e-4};
      break;
    case ProblemKind::Example42:
      cfg.params.mu = 0.14;
      cfg.params.gamma = 0.10;
      cfg.params.alpha = 0.72;
      cfg.x0 = {1.0, 0.0, 0.0, 0.0};
      cfg.x1 = {1.0, 0.0, 0.0, 0.0};
      cfg.tolerances = {1e-3, 1e-5, 1e-7};
      break;
    case ProblemKind::Custom:
      break;
  }
  return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
  auto pairs = read_pairs(path);
  const auto it = pairs.find("problem");
  if (it == pairs.end()) throw ConfigError("config: missing 'problem' key");
  const std::string problem = lower(it->second);
  pairs.erase(it);

  ProblemKind kind;
  if (problem == "example41") {
    kind = ProblemKind::Example41;
  } else if (problem == "example42") {
    kind = ProblemKind::Example42;
  } else if (problem == "custom") {
    kind = ProblemKind::Custom;
  } else {
    throw ConfigError("config: unknown problem '" + problem + "'");
  }

  ExperimentConfig cfg = default_config(kind);
  for (const auto& [key, value] : pairs) {
    if (key == "problem_file") {
      cfg.problem_file = value;
    } else if (key == "mu") {
      cfg.params.mu = parse_double(key, value);
    } else if (key == "gamma") {
      cfg.params.gamma = parse_double(key, value);
    } else if (key == "alpha") {
      cfg.params.alpha = parse_double(key, value);
    } else if (key == "max_iters") {
      cfg.params.max_iters = static_cast<int>(parse_long(key, value));
    } else if (key == "max_linesearch") {
      cfg.params.max_linesearch = static_cast<int>(parse_long(key, value));
    } else if (key == "validation") {
      cfg.params.validation = parse_validation(value);
    } else if (key == "instrument") {
      cfg.params.instrument = parse_long(key, value) != 0;
    } else if (key == "selection") {
      cfg.selection.strategy = parse_strategy(value);
    } else if (key == "seed") {
      cfg.selection.seed = static_cast<std::uint64_t>(parse_long(key, value));
    } else if (key == "x0") {
      cfg.x0 = parse_list(key, value);
    } else if (key == "x1") {
      cfg.x1 = parse_list(key, value);
    } else if (key == "eps_list") {
      cfg.tolerances = parse_list(key, value);
    } else if (key == "out") {
      cfg.out_dir = value;
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  if (kind == ProblemKind::Custom && cfg.problem_file.empty()) {
    throw ConfigError("config: custom problem requires 'problem_file'");
  }
  validate_config(cfg);
  return cfg;
}

void validate_config(const ExperimentConfig& config) {
  if (config.tolerances.empty()) {
    throw ConfigError("config: tolerance list is empty");
  }
  for (std::size_t i = 1; i < config.tolerances.size(); ++i) {
    if (!(config.tolerances[i] < config.tolerances[i - 1])) {
      throw ConfigError("config: tolerance list must be strictly decreasing");
    }
  }
  for (double eps : config.tolerances) {
    if (!(eps > 0.0)) throw ConfigError("config: tolerances must be positive");
  }
  if (config.x0.empty() || config.x1.empty()) {
    throw ConfigError("config: x0 and x1 are required");
  }
  try {
    SolverParams p = config.params;
    p.epsilon = config.tolerances.front();
    validate_params(p);  // range errors only; Warn diagnostics are recorded per run
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: invalid solver parameters: ") + e.what());
  }
}

VIProblem load_problem(const ExperimentConfig& config) {
  switch (config.kind) {
    case ProblemKind::Example41: return build_example41();
    case ProblemKind::Example42: return build_example42();
    case ProblemKind::Custom: return load_custom_problem(config.problem_file);
  }
  throw ConfigError("config: unknown problem kind");
}

}  // namespace mvi
