#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ravg/vec.hpp"

namespace ravg {

// Closed-form maximally monotone operator models. Each one admits an exact
// resolvent, evaluated by resolve() below; models without a closed-form
// resolvent are unsupported.

/// A == 0. Its resolvent is the identity.
struct ZeroOp {};

/// A x == {c}. Resolvent: x - gamma*c.
struct TranslationOp {
  Vector c;
  explicit TranslationOp(Vector c_);
};

/// Normal cone of the hyperplane {x : <a,x> = b}. Resolvent: metric projection.
struct NormalConeHyperplane {
  Vector a;
  double b = 0.0;
  NormalConeHyperplane(Vector a_, double b_);
};

/// Normal cone of the halfspace {x : <a,x> <= b}.
struct NormalConeHalfspace {
  Vector a;
  double b = 0.0;
  NormalConeHalfspace(Vector a_, double b_);
};

/// Normal cone of the box {x : lo <= x <= hi} (componentwise).
struct NormalConeBox {
  Vector lo;
  Vector hi;
  NormalConeBox(Vector lo_, Vector hi_);
};

/// Linear operator x -> M x with M symmetric positive semidefinite.
/// Construction rejects matrices with max |M - M^T| > 1e-12 or smallest
/// eigenvalue < -1e-10. The resolvent solves (I + gamma*M) y = x; the
/// LLT factorization for the last gamma is cached behind a mutex.
class LinearPSD {
 public:
  explicit LinearPSD(Eigen::MatrixXd M);
  const Eigen::MatrixXd& matrix() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  void resolve_into(double gamma, const Vector& x, Vector& out) const;

 private:
  Eigen::MatrixXd m_;
  struct FactorCache;
  std::shared_ptr<FactorCache> cache_;
};

using OperatorModel = std::variant<ZeroOp, TranslationOp, NormalConeHyperplane,
                                   NormalConeHalfspace, NormalConeBox, LinearPSD>;

/// Dimension the model acts on; nullopt for ZeroOp (any dimension).
std::optional<std::size_t> model_dim(const OperatorModel& model);

/// Convex coefficients lambda_i in (0,1) summing to 1, with the stored
/// complements mu_i = 1 - lambda_i.
struct Weights {
  std::vector<double> lambda;
  std::vector<double> mu;

  explicit Weights(std::vector<double> lambdas);
  static Weights equal(std::size_t m);

  std::size_t m() const { return lambda.size(); }
  bool is_equal(double tol = 1e-12) const;
};

/// y = J_{gamma A}(x), the unique y with x in y + gamma*A(y).
Vector resolve(const OperatorModel& model, double gamma, const Vector& x);
void resolve_into(const OperatorModel& model, double gamma, const Vector& x, Vector& out);

/// Weighted resolvent average sum_i lambda_i J_{A_i}(x) (all at gamma = 1).
Vector averaged_resolvent(const std::vector<OperatorModel>& models, const Weights& w,
                          const Vector& x);
/// Allocation-free variant for iteration loops; scratch is resized as needed.
void averaged_resolvent_into(const std::vector<OperatorModel>& models, const Weights& w,
                             const Vector& x, Vector& out, Vector& scratch);

struct FirmnessReport {
  std::size_t violations = 0;
  double worst_margin = 0.0;  // most negative slack <x-y, Tx-Ty> - |Tx-Ty|^2
};

/// Checks |Tx-Ty|^2 <= <x-y, Tx-Ty> + 1e-10 for T = J_{gamma A} on each pair.
FirmnessReport check_firm_nonexpansive(const OperatorModel& model, double gamma,
                                       const std::vector<std::pair<Vector, Vector>>& pairs);

}  // namespace ravg
