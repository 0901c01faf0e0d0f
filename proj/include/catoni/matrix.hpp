#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "catoni/error.hpp"

namespace catoni {

// Dense row-major matrix of doubles. Used for feature matrices, point sets
// and generic record batches (one record per row).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  std::span<double> row(std::size_t i) { return {a.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {a.data() + i * cols, cols}; }

  bool all_finite() const {
    for (double x : a) {
      if (!std::isfinite(x)) return false;
    }
    return true;
  }
};

inline double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double squared_distance(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

inline double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

// Cholesky factorization of a symmetric positive-definite matrix, in place
// on a copy. Returns false when the matrix is not (numerically) PD.
bool cholesky(const Matrix& a, Matrix& lower);

// Solves (L L^T) x = b given the lower Cholesky factor.
std::vector<double> cholesky_solve(const Matrix& lower, std::span<const double> b);

}  // namespace catoni
