#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "catoni/error.hpp"
#include "catoni/robust_mean.hpp"
#include "catoni/rng.hpp"

namespace catoni {

// A scalar loss source with known mean and a variance upper bound, used by
// the Monte-Carlo sandwich diagnostic.
struct LossSampler {
  std::function<double(Rng&)> draw;
  double mean = 0.0;
};

struct SandwichReport {
  std::vector<double> mu_grid;
  std::vector<double> r_bar_estimates;
  std::vector<double> b_plus;
  std::vector<double> b_minus;
  std::vector<double> mc_standard_errors;
  double mu_plus = 0.0;     // mean + alpha * v
  double mu_minus = 0.0;    // mean - alpha * v
  double mc_root = 0.0;     // Catoni root computed on the Monte-Carlo draws
  bool root_within_band = false;
  std::size_t violations = 0;  // grid points outside [b_minus - 4se, b_plus + 4se]

  bool ok() const { return violations == 0 && root_within_band; }
};

// Inputs shared by the excess-risk bound evaluators. The gamma functionals
// are taken as given (from dudley_integral or supplied by the caller);
// admissible partitions are never constructed here.
struct BoundInputs {
  double alpha = 0.0;
  double v = 0.0;
  std::size_t n = 0;
  double delta = 0.0;          // in (0, 1/3)
  double gamma2_d = 0.0;       // gamma_2(F, d)
  double gamma1_D = 0.0;       // gamma_1(F, D)
  double gamma2_quantile = 0.0;  // Gamma_delta
  double diam_d = 0.0;

  void validate() const;
};

struct BoundReport {
  double value = 0.0;
  double base_term = 0.0;  // 6 * (alpha v + 2 log(1/delta) / (n alpha))
  bool side_condition_ok = false;  // value <= 1/alpha
};

// alpha v + 2 log(1/delta) / (n alpha)
double a_alpha(double alpha, double v, std::size_t n, double delta);

// Monte-Carlo check that the expected truncated residual r_bar(mu) is
// squeezed between the quadratic envelopes B-(mu,0) and B+(mu,0), within
// four standard errors, and that the root sits in [mean - alpha v,
// mean + alpha v]. Requires at least 10^4 draws.
SandwichReport sandwich_diagnostic(const LossSampler& sampler, const CatoniParams& params,
                                   const std::vector<double>& mu_grid, std::size_t mc_samples,
                                   Rng& rng);

// Outer roots of the envelope polynomials: (mean - alpha v - 2 eps,
// mean + alpha v + 2 eps). Requires 1 - alpha^2 v - 2 alpha eps >= 0.
std::pair<double, double> quadratic_roots(double mean, double v, double alpha, double eps);

// 6 A_alpha(delta) + L log(2/delta) (gamma2_d / sqrt(n) + gamma1_D / n),
// up to the universal constant L supplied by the caller.
BoundReport theorem1_bound(const BoundInputs& inputs, double constant_L = 1.0);

// 6 A_alpha(delta) + K max(Gamma_delta, diam_d) sqrt(log(8/delta) / n).
BoundReport theorem2_bound(const BoundInputs& inputs, double constant_K = 1.0);

// (4 rho / eps)^(m k); covering number of the radius-rho ball (k = 1) or of
// the k-center quantizer class. Returns 1 when eps >= 4 rho.
double ball_covering_bound(double rho, std::size_t m, double eps, std::size_t k = 1);
double log_ball_covering_bound(double rho, std::size_t m, double eps, std::size_t k = 1);

// Entropy integral of (log N(eps))^(1/beta_exponent) over (0, upper], by
// adaptive Simpson quadrature at 1e-6 relative tolerance. The universal
// constant in front of the integral is not applied. Negative values of
// log_covering are clipped to zero.
double dudley_integral(const std::function<double(double)>& log_covering, double upper,
                       int beta_exponent);

}  // namespace catoni
