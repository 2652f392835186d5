#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvi {

/// A point of R^n. The length of the vector is the dimension.
using Point = std::vector<double>;

inline void check_same_dim(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}

inline bool all_finite(const Point& p) {
  for (double v : p) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

inline void ensure_finite(const Point& p, const char* name) {
  if (p.empty()) {
    throw std::invalid_argument(std::string(name) + " must have dimension >= 1");
  }
  if (!all_finite(p)) {
    throw std::invalid_argument(std::string(name) + " has non-finite coordinates");
  }
}

inline double dot(const Point& a, const Point& b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_sq(const Point& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

inline double norm(const Point& a) { return std::sqrt(norm_sq(a)); }

inline Point add(const Point& a, const Point& b) {
  check_same_dim(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point sub(const Point& a, const Point& b) {
  check_same_dim(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Point scale(double s, const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

/// s*a + b
inline Point axpy(double s, const Point& a, const Point& b) {
  check_same_dim(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + b[i];
  return r;
}

inline double dist(const Point& a, const Point& b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace mvi
