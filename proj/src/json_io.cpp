#include "ravg/json_io.hpp"

#include <stdexcept>

namespace ravg {

namespace {

using nlohmann::json;

json matrix_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  Eigen::MatrixXd M(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size())
      throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t c = 0; c < rows[i].size(); ++c)
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
  }
  return M;
}

}  // namespace

void to_json(nlohmann::json& j, const OperatorModel& model) {
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, ZeroOp>) {
          j = {{"variant", "zero"}};
        } else if constexpr (std::is_same_v<T, TranslationOp>) {
          j = {{"variant", "translation"}, {"c", op.c}};
        } else if constexpr (std::is_same_v<T, NormalConeHyperplane>) {
          j = {{"variant", "normal_cone_hyperplane"}, {"a", op.a}, {"b", op.b}};
        } else if constexpr (std::is_same_v<T, NormalConeHalfspace>) {
          j = {{"variant", "normal_cone_halfspace"}, {"a", op.a}, {"b", op.b}};
        } else if constexpr (std::is_same_v<T, NormalConeBox>) {
          j = {{"variant", "normal_cone_box"}, {"lo", op.lo}, {"hi", op.hi}};
        } else {
          j = {{"variant", "linear_psd"}, {"M", matrix_to_json(op.matrix())}};
        }
      },
      model);
}

void from_json(const nlohmann::json& j, OperatorModel& model) {
  const auto variant = j.at("variant").get<std::string>();
  if (variant == "zero") {
    model = ZeroOp{};
  } else if (variant == "translation") {
    model = TranslationOp(j.at("c").get<Vector>());
  } else if (variant == "normal_cone_hyperplane") {
    model = NormalConeHyperplane(j.at("a").get<Vector>(), j.at("b").get<double>());
  } else if (variant == "normal_cone_halfspace") {
    model = NormalConeHalfspace(j.at("a").get<Vector>(), j.at("b").get<double>());
  } else if (variant == "normal_cone_box") {
    model = NormalConeBox(j.at("lo").get<Vector>(), j.at("hi").get<Vector>());
  } else if (variant == "linear_psd") {
    model = LinearPSD(matrix_from_json(j.at("M")));
  } else {
    throw std::invalid_argument("unknown operator variant '" + variant + "'");
  }
}

void to_json(nlohmann::json& j, const ProductVector& x) { j = x.blocks; }

void from_json(const nlohmann::json& j, ProductVector& x) {
  x = ProductVector(j.get<std::vector<Vector>>());
}

void to_json(nlohmann::json& j, const ProductProblem& p) {
  j = {{"weights", p.weights.lambda}, {"models", p.models}, {"dim", p.dim}};
}

ProductProblem product_problem_from_json(const nlohmann::json& j) {
  return ProductProblem(j.at("models").get<std::vector<OperatorModel>>(),
                        Weights(j.at("weights").get<std::vector<double>>()),
                        j.at("dim").get<std::size_t>());
}

void to_json(nlohmann::json& j, const HyperplaneSystem& sys) {
  j = {{"rows", sys.rows}, {"rhs", sys.rhs}};
}

HyperplaneSystem hyperplane_system_from_json(const nlohmann::json& j) {
  return HyperplaneSystem(j.at("rows").get<std::vector<Vector>>(),
                          j.at("rhs").get<std::vector<double>>());
}

void to_json(nlohmann::json& j, const ExperimentConfig& config) {
  json algs = json::array();
  for (Algorithm a : config.algorithms) algs.push_back(std::string(to_string(a)));
  j = {{"dim", config.dim},
       {"num_sets", config.num_sets},
       {"seed", config.seed},
       {"instances", config.instances},
       {"iters", config.iters},
       {"algorithms", std::move(algs)},
       {"output_path", config.output_path}};
  if (config.weights.empty())
    j["weights"] = "equal";
  else
    j["weights"] = config.weights;
}

void from_json(const nlohmann::json& j, ExperimentConfig& config) {
  config = ExperimentConfig{};
  if (j.contains("dim")) config.dim = j.at("dim").get<std::size_t>();
  if (j.contains("num_sets")) config.num_sets = j.at("num_sets").get<std::size_t>();
  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    if (w.is_string()) {
      if (w.get<std::string>() != "equal")
        throw std::invalid_argument("weights must be \"equal\" or an array");
      config.weights.clear();
    } else {
      config.weights = w.get<std::vector<double>>();
    }
  }
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("instances")) config.instances = j.at("instances").get<std::size_t>();
  if (j.contains("iters")) config.iters = j.at("iters").get<std::size_t>();
  if (j.contains("algorithms")) {
    config.algorithms.clear();
    for (const auto& a : j.at("algorithms"))
      config.algorithms.push_back(algorithm_from_string(a.get<std::string>()));
  }
  if (j.contains("output_path")) config.output_path = j.at("output_path").get<std::string>();
}

}  // namespace ravg
