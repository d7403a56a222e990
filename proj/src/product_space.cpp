#include "ravg/product_space.hpp"

#include <cmath>
#include <stdexcept>

namespace ravg {

namespace {

void require_uniform(const ProductVector& x) {
  if (x.blocks.empty()) throw std::invalid_argument("product vector needs m >= 1 blocks");
  const std::size_t n = x.blocks.front().size();
  for (const auto& b : x.blocks)
    if (b.size() != n) throw std::invalid_argument("product vector blocks differ in dimension");
}

void require_shapes(const Weights& w, const ProductVector& x) {
  require_uniform(x);
  if (w.m() != x.m()) throw std::invalid_argument("weights/product length mismatch");
}

void require_shapes(const ProductProblem& p, const ProductVector& x) {
  require_uniform(x);
  if (p.m() != x.m()) throw std::invalid_argument("problem/product length mismatch");
  if (p.dim != x.block_dim()) throw std::invalid_argument("problem/product dimension mismatch");
}

// (R_k x)_k computed from the given blocks.
Vector mixed_block(const Weights& w, std::size_t k, const std::vector<Vector>& blocks) {
  Vector out(blocks.front().size(), 0.0);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j == k) continue;
    add_scaled_in_place(out, w.lambda[j] / w.mu[k], blocks[j]);
  }
  return out;
}

}  // namespace

ProductVector::ProductVector(std::vector<Vector> blocks_) : blocks(std::move(blocks_)) {
  require_uniform(*this);
}

ProductVector zero_product(std::size_t m, std::size_t n) {
  ProductVector x;
  x.blocks.assign(m, Vector(n, 0.0));
  return x;
}

ProductVector constant_product(std::size_t m, const Vector& v) {
  ProductVector x;
  x.blocks.assign(m, v);
  return x;
}

double dot(const ProductVector& x, const ProductVector& y) {
  if (x.m() != y.m()) throw std::invalid_argument("product vector length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.m(); ++i) s += dot(x.blocks[i], y.blocks[i]);
  return s;
}

double norm_sq(const ProductVector& x) {
  double s = 0.0;
  for (const auto& b : x.blocks) s += norm_sq(b);
  return s;
}

double norm(const ProductVector& x) { return std::sqrt(norm_sq(x)); }

double dist(const ProductVector& x, const ProductVector& y) {
  if (x.m() != y.m()) throw std::invalid_argument("product vector length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.m(); ++i) {
    const double d = dist(x.blocks[i], y.blocks[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

ProductProblem::ProductProblem(std::vector<OperatorModel> models_, Weights weights_,
                               std::size_t dim_)
    : models(std::move(models_)), weights(std::move(weights_)), dim(dim_) {
  if (models.size() != weights.m())
    throw std::invalid_argument("models/weights length mismatch");
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  for (const auto& model : models) {
    const auto d = model_dim(model);
    if (d && *d != dim) throw std::invalid_argument("model dimension differs from problem dimension");
  }
}

ProductVector apply_R(const Weights& w, const ProductVector& x) {
  require_shapes(w, x);
  ProductVector out;
  out.blocks.reserve(x.m());
  for (std::size_t i = 0; i < x.m(); ++i) out.blocks.push_back(mixed_block(w, i, x.blocks));
  return out;
}

ProductVector apply_R_adjoint(const Weights& w, const ProductVector& x) {
  require_shapes(w, x);
  ProductVector out;
  out.blocks.reserve(x.m());
  for (std::size_t i = 0; i < x.m(); ++i) {
    Vector block(x.block_dim(), 0.0);
    for (std::size_t j = 0; j < x.m(); ++j) {
      if (j == i) continue;
      add_scaled_in_place(block, w.lambda[i] / w.mu[j], x.blocks[j]);
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

ProductVector apply_R_k(const Weights& w, std::size_t k, const ProductVector& x) {
  require_shapes(w, x);
  if (k >= x.m()) throw std::invalid_argument("block index out of range");
  ProductVector out = x;
  out.blocks[k] = mixed_block(w, k, x.blocks);
  return out;
}

ProductVector apply_J(const ProductProblem& p, const ProductVector& x) {
  require_shapes(p, x);
  ProductVector out;
  out.blocks.resize(x.m());
  for (std::size_t i = 0; i < x.m(); ++i)
    resolve_into(p.models[i], 1.0 / p.weights.mu[i], x.blocks[i], out.blocks[i]);
  return out;
}

ProductVector apply_J_k(const ProductProblem& p, std::size_t k, const ProductVector& x) {
  require_shapes(p, x);
  if (k >= x.m()) throw std::invalid_argument("block index out of range");
  ProductVector out = x;
  resolve_into(p.models[k], 1.0 / p.weights.mu[k], x.blocks[k], out.blocks[k]);
  return out;
}

ProductVector apply_T(const ProductProblem& p, const ProductVector& x) {
  require_shapes(p, x);
  ProductVector y = x;
  Vector resolved;
  for (std::size_t k = 0; k < y.m(); ++k) {
    y.blocks[k] = mixed_block(p.weights, k, y.blocks);
    resolve_into(p.models[k], 1.0 / p.weights.mu[k], y.blocks[k], resolved);
    y.blocks[k] = resolved;
  }
  return y;
}

Vector combine_L(const Weights& w, const ProductVector& x) {
  require_shapes(w, x);
  Vector out(x.block_dim(), 0.0);
  for (std::size_t i = 0; i < x.m(); ++i) add_scaled_in_place(out, w.lambda[i], x.blocks[i]);
  return out;
}

ProductVector split_L_inverse(const ProductProblem& p, const Vector& x) {
  if (x.size() != p.dim) throw std::invalid_argument("vector dimension mismatch");
  ProductVector out;
  out.blocks.resize(p.m());
  for (std::size_t i = 0; i < p.m(); ++i) resolve_into(p.models[i], 1.0, x, out.blocks[i]);
  return out;
}

double s_residual(const ProductProblem& p, const ProductVector& x) {
  return dist(x, apply_J(p, apply_R(p.weights, x)));
}

ProductVector decompose_N(const Weights& w, const ProductVector& x) {
  require_shapes(w, x);
  if (w.m() < 3) throw std::invalid_argument("decomposition requires m >= 3");
  if (!w.is_equal()) throw std::invalid_argument("decomposition requires equal weights");
  Vector s(x.block_dim(), 0.0);
  for (const auto& b : x.blocks) add_scaled_in_place(s, 1.0, b);
  const double scale = 2.0 / static_cast<double>(w.m());
  ProductVector out;
  out.blocks.reserve(x.m());
  for (const auto& b : x.blocks) {
    Vector block(x.block_dim());
    for (std::size_t j = 0; j < block.size(); ++j) block[j] = -b[j] + scale * s[j];
    out.blocks.push_back(std::move(block));
  }
  return out;
}

Eigen::MatrixXd coefficient_matrix_R(const Weights& w) {
  const auto m = static_cast<Eigen::Index>(w.m());
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (i != j) K(i, j) = w.lambda[static_cast<std::size_t>(j)] / w.mu[static_cast<std::size_t>(i)];
  return K;
}

double operator_norm_R(const Weights& w, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(coefficient_matrix_R(w));
  return svd.singularValues()(0);
}

}  // namespace ravg
