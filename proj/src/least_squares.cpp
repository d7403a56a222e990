#include "ravg/least_squares.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ravg {

namespace {

Eigen::VectorXd stacked_rhs(const HyperplaneSystem& sys) {
  return Eigen::Map<const Eigen::VectorXd>(sys.rhs.data(), static_cast<Eigen::Index>(sys.m()));
}

Vector min_norm_least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd x = svd.solve(b);
  return Vector(x.data(), x.data() + x.size());
}

void require_normalized(const HyperplaneSystem& sys) {
  if (!sys.normalized)
    throw std::invalid_argument("system rows must be normalized (call normalize_rows)");
}

}  // namespace

HyperplaneSystem::HyperplaneSystem(std::vector<Vector> rows_, std::vector<double> rhs_)
    : rows(std::move(rows_)), rhs(std::move(rhs_)) {
  if (rows.empty()) throw std::invalid_argument("system needs at least one hyperplane");
  if (rows.size() != rhs.size()) throw std::invalid_argument("rows/rhs length mismatch");
  const std::size_t dim = rows.front().size();
  if (dim == 0) throw std::invalid_argument("rows need dimension >= 1");
  normalized = true;
  for (const auto& a : rows) {
    if (a.size() != dim) throw std::invalid_argument("rows differ in dimension");
    const double len = norm(a);
    if (len == 0.0) throw std::invalid_argument("zero row");
    if (std::abs(len - 1.0) > 1e-12) normalized = false;
  }
}

HyperplaneSystem normalize_rows(const HyperplaneSystem& sys) {
  std::vector<Vector> rows = sys.rows;
  std::vector<double> rhs = sys.rhs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double len = norm(rows[i]);
    for (double& v : rows[i]) v /= len;
    rhs[i] /= len;
  }
  return HyperplaneSystem(std::move(rows), std::move(rhs));
}

Eigen::MatrixXd stacked_matrix(const HyperplaneSystem& sys) {
  Eigen::MatrixXd A(static_cast<Eigen::Index>(sys.m()), static_cast<Eigen::Index>(sys.n()));
  for (std::size_t i = 0; i < sys.m(); ++i)
    for (std::size_t j = 0; j < sys.n(); ++j)
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sys.rows[i][j];
  return A;
}

Vector normal_equation_solve(const HyperplaneSystem& sys) {
  return min_norm_least_squares(stacked_matrix(sys), stacked_rhs(sys));
}

Vector weighted_normal_equation_solve(const HyperplaneSystem& sys, const Weights& w) {
  require_normalized(sys);
  if (w.m() != sys.m()) throw std::invalid_argument("weights/system length mismatch");
  Eigen::MatrixXd A = stacked_matrix(sys);
  Eigen::VectorXd b = stacked_rhs(sys);
  for (std::size_t i = 0; i < sys.m(); ++i) {
    const double d = std::sqrt(w.lambda[i]);
    A.row(static_cast<Eigen::Index>(i)) *= d;
    b(static_cast<Eigen::Index>(i)) *= d;
  }
  return min_norm_least_squares(A, b);
}

EquivalenceReport verify_fixed_point_equivalence(const HyperplaneSystem& sys, const Weights& w,
                                                 const Vector& x, double tol) {
  require_normalized(sys);
  if (w.m() != sys.m()) throw std::invalid_argument("weights/system length mismatch");
  if (x.size() != sys.n()) throw std::invalid_argument("vector dimension mismatch");

  EquivalenceReport report;
  // fixed-point side, through the projection operators
  report.fp_residual = dist(x, averaged_resolvent(hyperplane_models(sys), w, x));

  // normal-equation side, through explicit matrix products
  Eigen::MatrixXd DA = stacked_matrix(sys);
  Eigen::VectorXd Db = stacked_rhs(sys);
  for (std::size_t i = 0; i < sys.m(); ++i) {
    const double d = std::sqrt(w.lambda[i]);
    DA.row(static_cast<Eigen::Index>(i)) *= d;
    Db(static_cast<Eigen::Index>(i)) *= d;
  }
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
  report.ne_residual = (DA.transpose() * (DA * xv) - DA.transpose() * Db).norm();

  report.agree = (report.fp_residual <= tol) == (report.ne_residual <= tol);
  return report;
}

std::vector<OperatorModel> hyperplane_models(const HyperplaneSystem& sys) {
  std::vector<OperatorModel> models;
  models.reserve(sys.m());
  for (std::size_t i = 0; i < sys.m(); ++i)
    models.emplace_back(NormalConeHyperplane(sys.rows[i], sys.rhs[i]));
  return models;
}

void write_system_text(const HyperplaneSystem& sys, std::ostream& os) {
  char buf[64];
  for (std::size_t i = 0; i < sys.m(); ++i) {
    for (std::size_t j = 0; j < sys.n(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g ", sys.rows[i][j]);
      os << buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g\n", sys.rhs[i]);
    os << buf;
  }
}

HyperplaneSystem read_system_text(std::istream& is) {
  std::vector<Vector> rows;
  std::vector<double> rhs;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<double> values;
    double v;
    while (ls >> v) values.push_back(v);
    if (values.empty()) continue;  // blank line
    if (values.size() < 2) throw std::invalid_argument("system line needs coefficients and rhs");
    rhs.push_back(values.back());
    values.pop_back();
    rows.push_back(std::move(values));
  }
  return HyperplaneSystem(std::move(rows), std::move(rhs));
}

}  // namespace ravg
