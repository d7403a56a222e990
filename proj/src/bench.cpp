#include "ravg/bench.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "ravg/product_space.hpp"
#include "ravg/rng.hpp"

namespace ravg {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::JA: return "jA";
    case Algorithm::JR: return "jR";
    case Algorithm::T: return "T";
  }
  return "?";
}

Algorithm algorithm_from_string(std::string_view s) {
  if (s == "jA") return Algorithm::JA;
  if (s == "jR") return Algorithm::JR;
  if (s == "T") return Algorithm::T;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "' (expected jA, jR, T)");
}

void ExperimentConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (num_sets < 2) throw std::invalid_argument("num-sets must be >= 2");
  if (instances < 1) throw std::invalid_argument("instances must be >= 1");
  if (algorithms.empty()) throw std::invalid_argument("select at least one algorithm");
  make_weights();  // validates explicit weights
  if (output_path.empty()) throw std::invalid_argument("output path must be nonempty");
}

Weights ExperimentConfig::make_weights() const {
  if (weights.empty()) return Weights::equal(num_sets);
  if (weights.size() != num_sets)
    throw std::invalid_argument("weights length must equal num-sets");
  return Weights(weights);
}

HyperplaneSystem generate_random_hyperplanes(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
  SplitMix64 rng(seed);
  std::vector<Vector> rows(m, Vector(n));
  for (auto& row : rows)
    for (double& v : row) v = rng.next_gaussian();
  std::vector<double> rhs(m);
  for (double& v : rhs) v = rng.next_gaussian();
  for (auto& row : rows) {
    const double len = norm(row);
    if (len == 0.0) throw std::runtime_error("degenerate zero row drawn");
    for (double& v : row) v /= len;
  }
  return HyperplaneSystem(std::move(rows), std::move(rhs));
}

namespace {

// Exact-iteration stopping: never converge early on a positive step, never
// abort on large norms.
StoppingRule exact_iters_rule(std::size_t iters) {
  StoppingRule rule;
  rule.max_iters = iters;
  rule.step_tol = 0.0;
  rule.divergence_threshold = std::numeric_limits<double>::infinity();
  return rule;
}

// Curve of length iters+1 from a trace; a run that hit an exact fixed point
// early keeps its last dB value.
std::vector<double> curve_from_trace(const IterationTrace& trace, std::size_t iters) {
  std::vector<double> db;
  db.reserve(iters + 1);
  for (std::size_t i = 0; i <= iters; ++i)
    db.push_back(i < trace.records.size() ? trace.records[i].db_error
                                          : trace.records.back().db_error);
  return db;
}

}  // namespace

InstanceRun run_instance(const HyperplaneSystem& sys, const Weights& w, std::size_t iters,
                         const std::vector<Algorithm>& algorithms) {
  if (w.m() != sys.m()) throw std::invalid_argument("weights/system length mismatch");
  InstanceRun run;
  const auto models = hyperplane_models(sys);
  const Vector x0(sys.n(), 0.0);

  // dB is measured against the residual at the common start x0 = 0
  if (dist(averaged_resolvent(models, w, x0), x0) == 0.0) {
    run.skipped = true;
    return run;
  }
  if (iters == 0) {
    run.db.assign(algorithms.size(), {0.0});
    run.final_points.assign(algorithms.size(), x0);
    return run;
  }

  const StoppingRule rule = exact_iters_rule(iters);
  const ProductProblem problem(models, w, sys.n());
  const ProductVector px0 = zero_product(sys.m(), sys.n());
  for (Algorithm alg : algorithms) {
    switch (alg) {
      case Algorithm::JA: {
        IterationTrace trace = iterate_averaged_resolvent(models, w, x0, rule);
        run.db.push_back(curve_from_trace(trace, iters));
        run.final_points.push_back(std::move(trace.final_point));
        break;
      }
      case Algorithm::JR: {
        ProductRunResult r = iterate_product(problem, px0, rule, /*allow_two_blocks=*/true);
        run.db.push_back(curve_from_trace(r.trace, iters));
        run.final_points.push_back(std::move(r.trace.final_point));
        break;
      }
      case Algorithm::T: {
        ProductRunResult r = iterate_heuristic(problem, px0, rule);
        run.db.push_back(curve_from_trace(r.trace, iters));
        run.final_points.push_back(std::move(r.trace.final_point));
        break;
      }
    }
  }
  return run;
}

CurveTable run_experiment(const ExperimentConfig& config) {
  config.validate();
  const Weights w = config.make_weights();

  CurveTable table;
  table.algorithms = config.algorithms;
  table.mean_db.assign(config.iters + 1, std::vector<double>(config.algorithms.size(), 0.0));

  std::size_t used = 0;
  for (std::size_t k = 0; k < config.instances; ++k) {
    const auto sys =
        generate_random_hyperplanes(config.dim, config.num_sets, config.seed + k);
    const InstanceRun run = run_instance(sys, w, config.iters, config.algorithms);
    if (run.skipped) {
      ++table.skipped_instances;
      continue;
    }
    ++used;
    for (std::size_t a = 0; a < config.algorithms.size(); ++a)
      for (std::size_t i = 0; i <= config.iters; ++i) table.mean_db[i][a] += run.db[a][i];
  }
  if (used == 0)
    throw std::runtime_error("relative error undefined on every instance (zero initial residual)");
  for (auto& row : table.mean_db)
    for (double& v : row) v /= static_cast<double>(used);

  char line[256];
  std::snprintf(line, sizeof(line),
                "dim=%zu num_sets=%zu weights=%s seed=%llu instances=%zu iters=%zu", config.dim,
                config.num_sets, config.weights.empty() ? "equal" : "explicit",
                static_cast<unsigned long long>(config.seed), config.instances, config.iters);
  table.metadata.emplace_back(line);
  if (table.skipped_instances > 0) {
    std::snprintf(line, sizeof(line), "skipped_instances=%zu", table.skipped_instances);
    table.metadata.emplace_back(line);
  }
  for (Algorithm a : config.algorithms) {
    if (a == Algorithm::T)
      table.metadata.emplace_back("alg T: heuristic - no convergence guarantee");
    if (a == Algorithm::JR && config.weights.empty() && config.num_sets >= 3)
      table.metadata.emplace_back("alg jR: convergence proven (equal weights, m >= 3)");
    if (a == Algorithm::JR && (!config.weights.empty() || config.num_sets < 3))
      table.metadata.emplace_back("alg jR: outside proven theory for this configuration");
  }
  return table;
}

std::string emit_plot_data(const CurveTable& table, const std::string& path) {
  if (table.mean_db.empty()) throw std::invalid_argument("empty curve table");

  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot open output file: " + path);
  csv << "iter,alg,mean_db\n";
  char buf[96];
  for (std::size_t i = 0; i < table.mean_db.size(); ++i) {
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
      std::snprintf(buf, sizeof(buf), "%zu,%s,%.10g\n", i,
                    std::string(to_string(table.algorithms[a])).c_str(), table.mean_db[i][a]);
      csv << buf;
    }
  }
  if (!csv.good()) throw std::runtime_error("write failed: " + path);

  std::filesystem::path cols_path(path);
  cols_path.replace_extension(".dat");
  if (cols_path == std::filesystem::path(path)) cols_path += ".dat";
  std::ofstream cols(cols_path, std::ios::binary);
  if (!cols) throw std::runtime_error("cannot open output file: " + cols_path.string());
  for (const auto& meta : table.metadata) cols << "# " << meta << "\n";
  cols << "# columns: iter";
  for (Algorithm a : table.algorithms) cols << " " << to_string(a);
  cols << "\n";
  for (std::size_t i = 0; i < table.mean_db.size(); ++i) {
    cols << i;
    for (double v : table.mean_db[i]) {
      std::snprintf(buf, sizeof(buf), " %.10g", v);
      cols << buf;
    }
    cols << "\n";
  }
  if (!cols.good()) throw std::runtime_error("write failed: " + cols_path.string());
  return cols_path.string();
}

}  // namespace ravg
