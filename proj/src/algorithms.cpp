#include "ravg/algorithms.hpp"

#include <cmath>
#include <cstdio>

namespace ravg {

namespace {

double db_from_residuals(double resid, double resid0) {
  // resid0 > 0 guaranteed by callers; resid == 0 yields -inf
  return 20.0 * std::log10(resid / resid0);
}

template <class Point, class StepFn, class NormFn, class ResidualFn, class OnRecord>
IterationTrace drive(const Point& x0, const StoppingRule& rule, StepFn&& next, NormFn&& point_norm,
                     ResidualFn&& residual, OnRecord&& on_record, Point& final_iterate) {
  rule.validate();
  IterationTrace trace;
  trace.records.push_back({0, 0.0, point_norm(x0), 0.0});
  on_record(x0);

  const double resid0 = residual(x0);
  trace.db_defined = resid0 > 0.0;

  Point x = x0;
  trace.outcome = Outcome::MaxIters;
  for (std::size_t n = 1; n <= rule.max_iters; ++n) {
    Point y = next(x);
    const double step = dist(y, x);
    x = std::move(y);
    TraceRecord rec{n, step, point_norm(x), 0.0};
    if (trace.db_defined) rec.db_error = db_from_residuals(residual(x), resid0);
    trace.records.push_back(rec);
    on_record(x);
    if (rec.iterate_norm >= rule.divergence_threshold) {
      trace.outcome = Outcome::Diverged;
      break;
    }
    if (step <= rule.step_tol) {
      trace.outcome = Outcome::Converged;
      break;
    }
  }
  final_iterate = std::move(x);
  return trace;
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Converged: return "Converged";
    case Outcome::MaxIters: return "MaxIters";
    case Outcome::Diverged: return "Diverged";
  }
  return "Unknown";
}

IterationTrace iterate_averaged_resolvent(const std::vector<OperatorModel>& models,
                                          const Weights& w, const Vector& x0,
                                          const StoppingRule& rule) {
  rule.validate();
  if (models.size() != w.m()) throw std::invalid_argument("models/weights length mismatch");

  IterationTrace trace;
  trace.records.reserve(std::min<std::size_t>(rule.max_iters + 1, 1u << 16));
  trace.records.push_back({0, 0.0, norm(x0), 0.0});

  // For this driver |J_A x_n - x_n| is exactly the next step norm, so the
  // dB column costs nothing extra beyond one application at the end.
  Vector x = x0, next, scratch;
  double resid0 = 0.0;
  trace.outcome = Outcome::MaxIters;
  for (std::size_t n = 1; n <= rule.max_iters; ++n) {
    averaged_resolvent_into(models, w, x, next, scratch);
    const double step = dist(next, x);
    if (n == 1) {
      resid0 = step;
      trace.db_defined = resid0 > 0.0;
    }
    if (trace.db_defined) trace.records.back().db_error = db_from_residuals(step, resid0);
    x.swap(next);
    trace.records.push_back({n, step, norm(x), 0.0});
    if (trace.records.back().iterate_norm >= rule.divergence_threshold) {
      trace.outcome = Outcome::Diverged;
      break;
    }
    if (step <= rule.step_tol) {
      trace.outcome = Outcome::Converged;
      break;
    }
  }
  if (trace.db_defined) {
    averaged_resolvent_into(models, w, x, next, scratch);
    trace.records.back().db_error = db_from_residuals(dist(next, x), resid0);
  }
  trace.final_point = std::move(x);
  return trace;
}

namespace {

ProductRunResult run_product(const ProductProblem& p, const ProductVector& x0,
                             const StoppingRule& rule, bool heuristic, std::string note) {
  ProductRunResult result;
  auto next = [&](const ProductVector& x) {
    return heuristic ? apply_T(p, x) : apply_J(p, apply_R(p.weights, x));
  };
  auto residual = [&](const ProductVector& x) {
    const Vector projected = combine_L(p.weights, x);
    return dist(averaged_resolvent(p.models, p.weights, projected), projected);
  };
  auto on_record = [&](const ProductVector& x) {
    result.projected.push_back(combine_L(p.weights, x));
  };
  result.trace = drive(
      x0, rule, next, [](const ProductVector& x) { return norm(x); }, residual, on_record,
      result.final_iterate);
  result.trace.note = std::move(note);
  result.trace.final_point = result.projected.back();
  return result;
}

}  // namespace

ProductRunResult iterate_product(const ProductProblem& p, const ProductVector& x0,
                                 const StoppingRule& rule, bool allow_two_blocks) {
  if (p.m() < 3 && !allow_two_blocks)
    throw std::invalid_argument(
        "m = 2 refused: the composition can cycle with period 2 (pass allow_two_blocks to "
        "override)");
  std::string note;
  if (p.m() < 3)
    note = "outside proven theory: m = 2 admits exact 2-cycles";
  else if (!p.weights.is_equal())
    note = "outside proven theory: unequal weights";
  return run_product(p, x0, rule, /*heuristic=*/false, std::move(note));
}

ProductRunResult iterate_heuristic(const ProductProblem& p, const ProductVector& x0,
                                   const StoppingRule& rule) {
  return run_product(p, x0, rule, /*heuristic=*/true, "heuristic - no convergence guarantee");
}

double relative_error_db(const std::vector<OperatorModel>& models, const Weights& w,
                         const Vector& x0, const Vector& xn) {
  const double resid0 = dist(averaged_resolvent(models, w, x0), x0);
  if (resid0 == 0.0)
    throw std::domain_error("relative error undefined: initial point is already fixed");
  return db_from_residuals(dist(averaged_resolvent(models, w, xn), xn), resid0);
}

void write_trace_csv(const IterationTrace& trace, std::ostream& os) {
  os << "iter,step_norm,iterate_norm,db_error\n";
  char buf[160];
  for (const auto& r : trace.records) {
    std::snprintf(buf, sizeof(buf), "%zu,%.10g,%.10g,%.10g\n", r.iter, r.step_norm,
                  r.iterate_norm, r.db_error);
    os << buf;
  }
  os << "outcome," << to_string(trace.outcome) << "\n";
  if (!trace.note.empty()) os << "note," << trace.note << "\n";
}

}  // namespace ravg
