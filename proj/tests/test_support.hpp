#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ravg/operators.hpp"
#include "ravg/product_space.hpp"
#include "ravg/vec.hpp"

namespace ravg::testing {

inline Vector random_vector(std::mt19937_64& gen, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  Vector v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

inline ProductVector random_product(std::mt19937_64& gen, std::size_t m, std::size_t n,
                                    double scale = 1.0) {
  ProductVector x;
  x.blocks.reserve(m);
  for (std::size_t i = 0; i < m; ++i) x.blocks.push_back(random_vector(gen, n, scale));
  return x;
}

inline std::vector<std::pair<Vector, Vector>> random_vector_pairs(std::mt19937_64& gen,
                                                                  std::size_t count,
                                                                  std::size_t n) {
  std::vector<std::pair<Vector, Vector>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pairs.emplace_back(random_vector(gen, n), random_vector(gen, n));
  return pairs;
}

inline std::vector<std::pair<ProductVector, ProductVector>> random_product_pairs(
    std::mt19937_64& gen, std::size_t count, std::size_t m, std::size_t n) {
  std::vector<std::pair<ProductVector, ProductVector>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pairs.emplace_back(random_product(gen, m, n), random_product(gen, m, n));
  return pairs;
}

/// Random weights bounded away from 0 and 1, summing to 1 exactly enough for
/// the constructor.
inline Weights random_weights(std::mt19937_64& gen, std::size_t m) {
  std::uniform_real_distribution<double> dist(0.2, 1.0);
  std::vector<double> lambda(m);
  double sum = 0.0;
  for (double& l : lambda) {
    l = dist(gen);
    sum += l;
  }
  for (double& l : lambda) l /= sum;
  // repair rounding so the total is 1 within the constructor's tolerance
  double total = 0.0;
  for (double l : lambda) total += l;
  lambda.back() += 1.0 - total;
  return Weights(lambda);
}

}  // namespace ravg::testing
