#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ravg/operators.hpp"
#include "ravg/product_space.hpp"
#include "ravg/vec.hpp"

namespace ravg {

struct StoppingRule {
  std::size_t max_iters = 10000;
  double step_tol = 1e-10;               // converged when |x_{n+1} - x_n| <= step_tol
  double divergence_threshold = 1e12;    // diverged when |x_n| >= threshold

  void validate() const {
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(step_tol >= 0.0)) throw std::invalid_argument("step_tol must be nonnegative");
    if (!(divergence_threshold > 0.0))
      throw std::invalid_argument("divergence_threshold must be positive");
  }
};

enum class Outcome { Converged, MaxIters, Diverged };

std::string_view to_string(Outcome o);

struct TraceRecord {
  std::size_t iter = 0;
  double step_norm = 0.0;
  double iterate_norm = 0.0;
  double db_error = 0.0;
};

/// Per-iteration history of one run. Records hold the step norm into the
/// iterate, the iterate norm, and the relative fixed-point error in dB
/// (0 at iteration 0). For product-space runs the norms are product norms
/// and final_point is the last projected iterate.
struct IterationTrace {
  std::vector<TraceRecord> records;
  Outcome outcome = Outcome::MaxIters;
  Vector final_point;
  bool db_defined = true;  // false when the initial fixed-point residual is zero
  std::string note;        // nonempty for runs without a convergence guarantee
};

/// Iterates x_{n+1} = (sum_i lambda_i J_{A_i}) x_n.
IterationTrace iterate_averaged_resolvent(const std::vector<OperatorModel>& models,
                                          const Weights& w, const Vector& x0,
                                          const StoppingRule& rule);

struct ProductRunResult {
  IterationTrace trace;
  std::vector<Vector> projected;  // combine_L of every recorded iterate
  ProductVector final_iterate;
};

/// Iterates the composition J o R in the product space. Convergence is
/// guaranteed for equal weights and m >= 3; m = 2 is refused unless
/// allow_two_blocks is set, since e.g. zero operators from distinct blocks
/// produce an exact 2-cycle. Unequal weights run but the trace is tagged.
ProductRunResult iterate_product(const ProductProblem& p, const ProductVector& x0,
                                 const StoppingRule& rule, bool allow_two_blocks = false);

/// Iterates the sequential sweep T. No convergence guarantee exists; the
/// trace is always tagged accordingly.
ProductRunResult iterate_heuristic(const ProductProblem& p, const ProductVector& x0,
                                   const StoppingRule& rule);

/// 10*log10(|J_A xn - xn|^2 / |J_A x0 - x0|^2). Throws std::domain_error
/// when the initial residual vanishes (x0 already fixed).
double relative_error_db(const std::vector<OperatorModel>& models, const Weights& w,
                         const Vector& x0, const Vector& xn);

/// Largest observed ratio |F(x)-F(y)| / |x-y| over the pairs; a lower bound
/// on the true Lipschitz constant. Throws on a coincident pair.
template <class Point, class Map>
double lipschitz_probe(Map&& map, const std::vector<std::pair<Point, Point>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("need at least one pair");
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    const double d = dist(x, y);
    if (d == 0.0) throw std::invalid_argument("coincident pair");
    const double ratio = dist(map(x), map(y)) / d;
    if (ratio > worst) worst = ratio;
  }
  return worst;
}

/// CSV rows "iter,step_norm,iterate_norm,db_error" with the outcome (and any
/// note) appended as footer records.
void write_trace_csv(const IterationTrace& trace, std::ostream& os);

}  // namespace ravg
