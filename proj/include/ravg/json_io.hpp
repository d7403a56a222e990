#pragma once

#include <json.hpp>

#include "ravg/bench.hpp"
#include "ravg/least_squares.hpp"
#include "ravg/operators.hpp"
#include "ravg/product_space.hpp"

// JSON wire formats:
//   Vector                -> [x_1, ..., x_n]
//   OperatorModel         -> {"variant": "...", fields...}
//   ProductVector         -> [[...], ..., [...]]
//   ProductProblem        -> {"weights": [...], "models": [...], "dim": n}
//   HyperplaneSystem      -> {"rows": [[...]], "rhs": [...]}
//   ExperimentConfig      -> {"dim", "num_sets", "weights" ("equal" or [...]),
//                             "seed", "instances", "iters", "algorithms",
//                             "output_path"}

namespace ravg {

void to_json(nlohmann::json& j, const OperatorModel& model);
void from_json(const nlohmann::json& j, OperatorModel& model);

void to_json(nlohmann::json& j, const ProductVector& x);
void from_json(const nlohmann::json& j, ProductVector& x);

void to_json(nlohmann::json& j, const ProductProblem& p);
ProductProblem product_problem_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const HyperplaneSystem& sys);
HyperplaneSystem hyperplane_system_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const ExperimentConfig& config);
void from_json(const nlohmann::json& j, ExperimentConfig& config);

}  // namespace ravg
