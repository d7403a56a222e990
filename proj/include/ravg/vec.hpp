#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ravg {

/// Dense vector in the ambient space X.
using Vector = std::vector<double>;

inline void require_same_dim(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector dimension mismatch");
}

inline double dot(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm_sq(const Vector& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

inline double norm(const Vector& x) { return std::sqrt(norm_sq(x)); }

/// Euclidean distance |x - y|.
inline double dist(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline Vector sub(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

inline Vector add(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

inline Vector scaled(double a, const Vector& x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i];
  return r;
}

/// y += a * x
inline void add_scaled_in_place(Vector& y, double a, const Vector& x) {
  require_same_dim(y, x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace ravg
