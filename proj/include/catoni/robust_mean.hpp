#pragma once

#include <cstddef>
#include <span>

#include "catoni/error.hpp"

namespace catoni {

// Parameters of the Catoni estimator: truncation scale alpha, variance
// upper bound v, confidence delta and the sample size the alpha-selection
// rules refer to.
struct CatoniParams {
  double alpha = 0.0;
  double v = 0.0;
  double delta = 0.0;
  std::size_t n = 0;

  void validate() const;
};

struct MeanEstimate {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;  // |r_hat(value)|, at most the solver tolerance
};

// Soft truncation: phi(x) = -log(1 - x + x^2/2) for x < 0 and
// log(1 + x + x^2/2) for x >= 0. Odd, non-decreasing, 1-Lipschitz.
double phi(double x);

// Derivative of phi; takes values in (0, 1] with phi_prime(0) = 1.
double phi_prime(double x);

// Root of mu -> (1/(n*alpha)) * sum_i phi(alpha * (x_i - mu)).
// The root is unique (the map is strictly decreasing) and lies in
// [min sample, max sample]; solved to 1e-10 * (1 + max - min).
MeanEstimate catoni_mean(std::span<const double> sample, const CatoniParams& params);

// alpha for a prescribed confidence delta; requires n > 2 log(1/delta).
double alpha_fixed_confidence(double v, std::size_t n, double delta);

// Confidence-independent choice alpha = sqrt(2 / (n v)).
double alpha_simple(double v, std::size_t n);

// Union bound over a finite class of size class_size: the fixed-confidence
// rule evaluated at effective confidence delta / class_size.
double alpha_finite_class(double v, std::size_t n, double delta, std::size_t class_size);

// Deviation half-width sqrt(2 v log(1/delta) / (n (1 - (2/n) log(1/delta)))),
// matching alpha_fixed_confidence.
double deviation_bound_fixed(double v, std::size_t n, double delta);

// Half-width (1 + log(1/delta)) sqrt(v/n) for the simple rule; requires
// n > 4 (1 + log(1/delta)). delta = 1 is accepted as a formula edge case.
double deviation_bound_simple(double v, std::size_t n, double delta);

// Median of block means over num_blocks contiguous in-order blocks whose
// sizes differ by at most one. Median of an even list averages the two
// central values.
double median_of_means(std::span<const double> sample, std::size_t num_blocks);

namespace detail {

// Root finder used by catoni_mean and by the risk minimizer. When hint is
// non-null the bisection phase is skipped and Newton starts at *hint
// (clamped into the bracket); useful when solving a slowly moving root.
MeanEstimate catoni_root(std::span<const double> sample, double alpha, const double* hint);

// Shared inner formula: alpha for log-term L = log(1/effective delta).
double alpha_from_log_term(double v, std::size_t n, double log_term);

}  // namespace detail

}  // namespace catoni
