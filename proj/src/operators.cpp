#include "ravg/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

namespace ravg {

namespace {

void require_finite(const Vector& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

void require_nonzero(const Vector& a) {
  if (a.empty()) throw std::invalid_argument("normal vector must have dimension >= 1");
  if (norm_sq(a) == 0.0) throw std::invalid_argument("normal vector must be nonzero");
}

}  // namespace

TranslationOp::TranslationOp(Vector c_) : c(std::move(c_)) {
  if (c.empty()) throw std::invalid_argument("translation needs dimension >= 1");
  require_finite(c, "translation");
}

NormalConeHyperplane::NormalConeHyperplane(Vector a_, double b_) : a(std::move(a_)), b(b_) {
  require_nonzero(a);
  require_finite(a, "hyperplane normal");
  if (!std::isfinite(b)) throw std::invalid_argument("hyperplane offset must be finite");
}

NormalConeHalfspace::NormalConeHalfspace(Vector a_, double b_) : a(std::move(a_)), b(b_) {
  require_nonzero(a);
  require_finite(a, "halfspace normal");
  if (!std::isfinite(b)) throw std::invalid_argument("halfspace offset must be finite");
}

NormalConeBox::NormalConeBox(Vector lo_, Vector hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.empty()) throw std::invalid_argument("box needs dimension >= 1");
  require_same_dim(lo, hi);
  require_finite(lo, "box lower bound");
  require_finite(hi, "box upper bound");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("box requires lo <= hi componentwise");
}

struct LinearPSD::FactorCache {
  std::mutex mutex;
  double gamma = -1.0;
  Eigen::LLT<Eigen::MatrixXd> llt;
};

LinearPSD::LinearPSD(Eigen::MatrixXd M) : m_(std::move(M)), cache_(std::make_shared<FactorCache>()) {
  if (m_.rows() == 0 || m_.rows() != m_.cols())
    throw std::invalid_argument("matrix must be square and nonempty");
  const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) throw std::invalid_argument("matrix must be symmetric to 1e-12");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue computation failed");
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("matrix must be positive semidefinite (eigenvalue < -1e-10)");
}

void LinearPSD::resolve_into(double gamma, const Vector& x, Vector& out) const {
  const auto n = dim();
  if (x.size() != n) throw std::invalid_argument("vector dimension mismatch");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (cache_->gamma != gamma) {
    Eigen::MatrixXd shifted = gamma * m_;
    shifted.diagonal().array() += 1.0;
    cache_->llt.compute(shifted);
    if (cache_->llt.info() != Eigen::Success)
      throw std::runtime_error("resolvent solve failed: I + gamma*M not positive definite");
    cache_->gamma = gamma;
  }
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd y = cache_->llt.solve(xv);
  out.assign(y.data(), y.data() + n);
}

std::optional<std::size_t> model_dim(const OperatorModel& model) {
  return std::visit(
      [](const auto& op) -> std::optional<std::size_t> {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, ZeroOp>) return std::nullopt;
        else if constexpr (std::is_same_v<T, TranslationOp>) return op.c.size();
        else if constexpr (std::is_same_v<T, NormalConeHyperplane>) return op.a.size();
        else if constexpr (std::is_same_v<T, NormalConeHalfspace>) return op.a.size();
        else if constexpr (std::is_same_v<T, NormalConeBox>) return op.lo.size();
        else return op.dim();
      },
      model);
}

Weights::Weights(std::vector<double> lambdas) : lambda(std::move(lambdas)) {
  if (lambda.size() < 2) throw std::invalid_argument("weights require m >= 2");
  double sum = 0.0;
  for (double l : lambda) {
    if (!(l > 0.0 && l < 1.0)) throw std::invalid_argument("each weight must lie in (0,1)");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1 within 1e-12");
  mu.resize(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) mu[i] = 1.0 - lambda[i];
}

Weights Weights::equal(std::size_t m) {
  if (m < 2) throw std::invalid_argument("weights require m >= 2");
  return Weights(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

bool Weights::is_equal(double tol) const {
  const double target = 1.0 / static_cast<double>(m());
  return std::all_of(lambda.begin(), lambda.end(),
                     [&](double l) { return std::abs(l - target) <= tol; });
}

void resolve_into(const OperatorModel& model, double gamma, const Vector& x, Vector& out) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, ZeroOp>) {
          out = x;
        } else if constexpr (std::is_same_v<T, TranslationOp>) {
          require_same_dim(x, op.c);
          out.resize(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - gamma * op.c[i];
        } else if constexpr (std::is_same_v<T, NormalConeHyperplane>) {
          // projection onto the hyperplane; gamma drops out
          const double t = (op.b - dot(op.a, x)) / norm_sq(op.a);
          out = x;
          add_scaled_in_place(out, t, op.a);
        } else if constexpr (std::is_same_v<T, NormalConeHalfspace>) {
          const double slack = dot(op.a, x) - op.b;
          out = x;
          if (slack > 0.0) add_scaled_in_place(out, -slack / norm_sq(op.a), op.a);
        } else if constexpr (std::is_same_v<T, NormalConeBox>) {
          require_same_dim(x, op.lo);
          out.resize(x.size());
          for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = std::min(std::max(x[i], op.lo[i]), op.hi[i]);
        } else {
          op.resolve_into(gamma, x, out);
        }
      },
      model);
}

Vector resolve(const OperatorModel& model, double gamma, const Vector& x) {
  Vector out;
  resolve_into(model, gamma, x, out);
  return out;
}

void averaged_resolvent_into(const std::vector<OperatorModel>& models, const Weights& w,
                             const Vector& x, Vector& out, Vector& scratch) {
  if (models.size() != w.m()) throw std::invalid_argument("models/weights length mismatch");
  out.assign(x.size(), 0.0);
  for (std::size_t i = 0; i < models.size(); ++i) {
    resolve_into(models[i], 1.0, x, scratch);
    add_scaled_in_place(out, w.lambda[i], scratch);
  }
}

Vector averaged_resolvent(const std::vector<OperatorModel>& models, const Weights& w,
                          const Vector& x) {
  Vector out, scratch;
  averaged_resolvent_into(models, w, x, out, scratch);
  return out;
}

FirmnessReport check_firm_nonexpansive(const OperatorModel& model, double gamma,
                                       const std::vector<std::pair<Vector, Vector>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("need at least one pair");
  FirmnessReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  Vector tx, ty;
  for (const auto& [x, y] : pairs) {
    require_same_dim(x, y);
    resolve_into(model, gamma, x, tx);
    resolve_into(model, gamma, y, ty);
    const Vector dxy = sub(x, y);
    const Vector dt = sub(tx, ty);
    const double slack = dot(dxy, dt) - norm_sq(dt);
    report.worst_margin = std::min(report.worst_margin, slack);
    if (slack < -1e-10) ++report.violations;
  }
  return report;
}

}  // namespace ravg
