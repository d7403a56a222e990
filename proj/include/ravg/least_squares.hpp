#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <istream>
#include <ostream>
#include <vector>

#include "ravg/operators.hpp"
#include "ravg/vec.hpp"

namespace ravg {

/// m hyperplanes <a_i, x> = b_i. The normalized flag records whether every
/// row has unit Euclidean norm (within 1e-12); it is derived at construction.
struct HyperplaneSystem {
  std::vector<Vector> rows;
  std::vector<double> rhs;
  bool normalized = false;

  HyperplaneSystem(std::vector<Vector> rows_, std::vector<double> rhs_);

  std::size_t m() const { return rows.size(); }
  std::size_t n() const { return rows.empty() ? 0 : rows.front().size(); }
};

/// Rescales each (a_i, b_i) by 1/|a_i|. The hyperplanes are unchanged; the
/// least-squares solutions of the stacked system generally are not.
HyperplaneSystem normalize_rows(const HyperplaneSystem& sys);

/// Minimum-norm solution of A* A x = A* b for the stacked system, computed by
/// an orthogonalization-based least-squares solve (never by forming A* A).
Vector normal_equation_solve(const HyperplaneSystem& sys);

/// Minimum-norm solution of (DA)*(DA) x = (DA)* D b with D = diag(sqrt(lambda_i)).
/// For a normalized system this is the fixed point set of the weighted
/// averaged projections; unnormalized input is rejected.
Vector weighted_normal_equation_solve(const HyperplaneSystem& sys, const Weights& w);

struct EquivalenceReport {
  double fp_residual = 0.0;  // |x - sum_i lambda_i P_i x|, via the projections
  double ne_residual = 0.0;  // |(DA)*(DA) x - (DA)* D b|, via matrix products
  bool agree = false;        // both <= tol or both > tol
};

/// Evaluates both sides of the fixed-point / normal-equation correspondence
/// at x through independent routes. Requires a normalized system.
EquivalenceReport verify_fixed_point_equivalence(const HyperplaneSystem& sys, const Weights& w,
                                                 const Vector& x, double tol = 1e-9);

/// One NormalConeHyperplane model per row.
std::vector<OperatorModel> hyperplane_models(const HyperplaneSystem& sys);

/// Rows stacked into an m-by-n matrix.
Eigen::MatrixXd stacked_matrix(const HyperplaneSystem& sys);

// Plain-text format: one line per hyperplane, "a_1 ... a_n b",
// whitespace-separated.
void write_system_text(const HyperplaneSystem& sys, std::ostream& os);
HyperplaneSystem read_system_text(std::istream& is);

}  // namespace ravg
