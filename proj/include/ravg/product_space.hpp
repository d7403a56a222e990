#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "ravg/operators.hpp"
#include "ravg/vec.hpp"

namespace ravg {

/// Element of the product space X^m: m blocks of equal dimension, with the
/// blockwise-sum inner product <x,y> = sum_i <x_i, y_i>.
struct ProductVector {
  std::vector<Vector> blocks;

  ProductVector() = default;
  explicit ProductVector(std::vector<Vector> blocks_);

  std::size_t m() const { return blocks.size(); }
  std::size_t block_dim() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

ProductVector zero_product(std::size_t m, std::size_t n);
/// Diagonal embedding (x, x, ..., x).
ProductVector constant_product(std::size_t m, const Vector& x);

double dot(const ProductVector& x, const ProductVector& y);
double norm_sq(const ProductVector& x);
double norm(const ProductVector& x);
double dist(const ProductVector& x, const ProductVector& y);

/// A full problem instance: m operator models, convex weights, and the
/// common block dimension.
struct ProductProblem {
  std::vector<OperatorModel> models;
  Weights weights;
  std::size_t dim;

  ProductProblem(std::vector<OperatorModel> models_, Weights weights_, std::size_t dim_);
  std::size_t m() const { return models.size(); }
};

// The linear block-mixing operator and its relatives act through the m-by-m
// coefficient matrix K with K_ii = 0 and K_ij = lambda_j / mu_i, applied
// across blocks; nothing of size (m*n)-by-(m*n) is ever formed.

/// (R x)_i = sum_{j != i} (lambda_j / mu_i) x_j. Every row of coefficients
/// sums to 1, so the diagonal is fixed.
ProductVector apply_R(const Weights& w, const ProductVector& x);

/// Adjoint: (R* x)_i = sum_{j != i} (lambda_i / mu_j) x_j.
ProductVector apply_R_adjoint(const Weights& w, const ProductVector& x);

/// Replaces block k only (k is 0-based); all other blocks pass through.
ProductVector apply_R_k(const Weights& w, std::size_t k, const ProductVector& x);

/// Blockwise resolvents: block i becomes J_{mu_i^{-1} A_i}(x_i).
ProductVector apply_J(const ProductProblem& p, const ProductVector& x);

/// Resolvent on block k only.
ProductVector apply_J_k(const ProductProblem& p, std::size_t k, const ProductVector& x);

/// The Gauss-Seidel-style sweep J_m R_m ... J_1 R_1: block k is remixed from
/// the *current* blocks and resolved, in index order. Not nonexpansive in
/// general.
ProductVector apply_T(const ProductProblem& p, const ProductVector& x);

/// L x = sum_i lambda_i x_i, mapping the product space down to X.
Vector combine_L(const Weights& w, const ProductVector& x);

/// (J_{A_i} x)_i. For x a fixed point of the averaged resolvent this lands in
/// the fixed-point set of J o R and combine_L inverts it.
ProductVector split_L_inverse(const ProductProblem& p, const Vector& x);

/// |x - (J o R) x| in the product norm; zero exactly on Fix(J o R).
double s_residual(const ProductProblem& p, const ProductVector& x);

/// For equal weights and m >= 3, the isometric part N of R = (1-alpha) Id +
/// alpha N with alpha = m/(2m-2): N x = -x + (2/m) (s, ..., s), s = sum_i x_i.
/// Rejects unequal weights and m < 3.
ProductVector decompose_N(const Weights& w, const ProductVector& x);

/// The m-by-m coefficient matrix K of R.
Eigen::MatrixXd coefficient_matrix_R(const Weights& w);

/// Operator norm of R: largest singular value of K, accurate to tol (at
/// least machine precision).
double operator_norm_R(const Weights& w, double tol = 1e-12);

}  // namespace ravg
