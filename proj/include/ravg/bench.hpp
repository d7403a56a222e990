#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ravg/algorithms.hpp"
#include "ravg/least_squares.hpp"
#include "ravg/operators.hpp"
#include "ravg/vec.hpp"

namespace ravg {

enum class Algorithm { JA, JR, T };

std::string_view to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view s);

struct ExperimentConfig {
  std::size_t dim = 50;
  std::size_t num_sets = 55;
  std::vector<double> weights;  // empty means equal weights
  std::uint64_t seed = 1;
  std::size_t instances = 5;
  std::size_t iters = 100;
  std::vector<Algorithm> algorithms = {Algorithm::JA, Algorithm::JR, Algorithm::T};
  std::string output_path = "curves.csv";

  void validate() const;
  Weights make_weights() const;
};

/// Mean dB error per algorithm per iteration, averaged over instances.
/// Row 0 is 0 dB for every algorithm; there are iters + 1 rows.
struct CurveTable {
  std::vector<Algorithm> algorithms;
  std::vector<std::vector<double>> mean_db;  // [iter][algorithm index]
  std::size_t skipped_instances = 0;
  std::vector<std::string> metadata;  // emitted as '#' header lines in the columns file
};

/// Rows i.i.d. standard normal then normalized to unit length, right-hand
/// sides i.i.d. standard normal; deterministic in the seed. Entries are drawn
/// row by row, then all right-hand sides. For m > n the system is
/// inconsistent with probability 1.
HyperplaneSystem generate_random_hyperplanes(std::size_t n, std::size_t m, std::uint64_t seed);

struct InstanceRun {
  bool skipped = false;                      // initial residual was zero
  std::vector<std::vector<double>> db;       // [algorithm index][iteration 0..iters]
  std::vector<Vector> final_points;          // last (projected) iterate per algorithm
};

/// Runs the selected algorithms from the zero vector for exactly `iters`
/// iterations on one system.
InstanceRun run_instance(const HyperplaneSystem& sys, const Weights& w, std::size_t iters,
                         const std::vector<Algorithm>& algorithms);

/// Instance k uses seed + k. Curves are averaged over the instances whose
/// dB metric is defined; throws if none remain.
CurveTable run_experiment(const ExperimentConfig& config);

/// Writes the CSV (header exactly "iter,alg,mean_db") to `path` and a
/// whitespace-separated columns file with the metadata header to the same
/// path with extension ".dat". Returns the columns path.
std::string emit_plot_data(const CurveTable& table, const std::string& path);

}  // namespace ravg
