#include "catoni/robust_mean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace catoni {

void CatoniParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) raise(errc::invalid_argument, "alpha must be positive and finite");
  if (!(v > 0.0)) raise(errc::non_positive_variance, "variance bound v must be positive");
  if (!(delta > 0.0) || !(delta < 1.0)) raise(errc::invalid_argument, "delta must lie in (0,1)");
  if (n < 1) raise(errc::invalid_argument, "n must be at least 1");
}

double phi(double x) {
  // Beyond |x| ~ 1e150 the x^2/2 term overflows; use the asymptotic form.
  if (x > 1e150) return 2.0 * std::log(x) - std::numbers::ln2;
  if (x < -1e150) return -(2.0 * std::log(-x) - std::numbers::ln2);
  if (x < 0.0) return -std::log1p(-x + 0.5 * x * x);
  return std::log1p(x + 0.5 * x * x);
}

double phi_prime(double x) {
  if (x < 0.0) {
    const double ax = -x;
    if (ax > 1e150) return 2.0 / ax;
    return (1.0 + ax) / (1.0 + ax + 0.5 * ax * ax);
  }
  if (x > 1e150) return 2.0 / x;
  return (1.0 + x) / (1.0 + x + 0.5 * x * x);
}

namespace detail {

namespace {

struct REval {
  double f;       // r_hat(mu)
  double fprime;  // d r_hat / d mu, in [-1, 0]
};

double r_hat(std::span<const double> xs, double alpha, double mu) {
  double s = 0.0;
  for (double x : xs) s += phi(alpha * (x - mu));
  return s / (static_cast<double>(xs.size()) * alpha);
}

REval r_hat_with_derivative(std::span<const double> xs, double alpha, double mu) {
  double s = 0.0;
  double sp = 0.0;
  for (double x : xs) {
    const double t = alpha * (x - mu);
    s += phi(t);
    sp += phi_prime(t);
  }
  const double n = static_cast<double>(xs.size());
  return {s / (n * alpha), -sp / n};
}

}  // namespace

MeanEstimate catoni_root(std::span<const double> sample, double alpha, const double* hint) {
  if (sample.empty()) raise(errc::empty_sample, "catoni_mean: empty sample");
  double lo = sample[0];
  double hi = sample[0];
  for (double x : sample) {
    if (!std::isfinite(x)) raise(errc::non_finite_input, "catoni_mean: non-finite sample value");
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) raise(errc::invalid_argument, "catoni_mean: alpha must be positive");

  MeanEstimate est;
  if (lo == hi) {
    est.value = lo;  // r_hat(lo) = 0 exactly
    return est;
  }

  const double range = hi - lo;
  const double tol = 1e-10 * (1.0 + range);
  const int max_iter = 200;
  int evals = 0;

  // Bisection until the bracket is small, then Newton with the bracket as
  // a safety net. r_hat is non-increasing with slope in [-1, 0], so the
  // bracket always contains the root and |r_hat(mu)| <= |mu - root|.
  double mu = 0.5 * (lo + hi);
  bool newton_phase = false;
  const double switch_width = 1e-6 * range;
  if (hint != nullptr) {
    mu = std::clamp(*hint, lo, hi);
    newton_phase = true;
  }

  while (evals < max_iter) {
    if (!newton_phase && (hi - lo) < switch_width) newton_phase = true;

    if (!newton_phase) {
      mu = 0.5 * (lo + hi);
      const double f = r_hat(sample, alpha, mu);
      ++evals;
      if (f == 0.0) {
        est.value = mu;
        est.iterations = evals;
        est.residual = 0.0;
        return est;
      }
      if (f > 0.0) {
        lo = mu;
      } else {
        hi = mu;
      }
      if ((hi - lo) <= tol) {
        est.value = 0.5 * (lo + hi);
        est.iterations = evals;
        est.residual = std::abs(r_hat(sample, alpha, est.value));
        return est;
      }
      continue;
    }

    const REval e = r_hat_with_derivative(sample, alpha, mu);
    ++evals;
    if (e.f == 0.0) {
      est.value = mu;
      est.iterations = evals;
      est.residual = 0.0;
      return est;
    }
    if (e.f > 0.0) {
      lo = mu;
    } else {
      hi = mu;
    }
    if ((hi - lo) <= tol) {
      // |r_hat(mu)| <= |mu - root| since the slope is in [-1, 0].
      est.value = mu;
      est.iterations = evals;
      est.residual = std::abs(e.f);
      return est;
    }
    double next;
    if (e.fprime < 0.0) {
      next = mu - e.f / e.fprime;
      if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);  // overshoot
    } else {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - mu) <= tol) {
      // Newton has locked on: the remaining error is of the order of the
      // last step, which is below tolerance.
      mu = next;
      est.value = mu;
      est.iterations = ++evals;
      est.residual = std::abs(r_hat(sample, alpha, mu));
      return est;
    }
    mu = next;
  }
  raise(errc::no_convergence, "catoni_mean: root finder exceeded iteration cap");
}

double alpha_from_log_term(double v, std::size_t n, double log_term) {
  if (!(v > 0.0)) raise(errc::non_positive_variance, "variance bound v must be positive");
  const double nd = static_cast<double>(n);
  if (!(nd > 2.0 * log_term)) {
    raise(errc::confidence_too_tight, "alpha selection requires n > 2 log(1/delta_eff)");
  }
  const double denom_inner = 1.0 - (2.0 / nd) * log_term;
  const double v_eff = v + 2.0 * v * log_term / (nd * denom_inner);
  return std::sqrt(2.0 * log_term / (nd * v_eff));
}

}  // namespace detail

MeanEstimate catoni_mean(std::span<const double> sample, const CatoniParams& params) {
  if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) {
    raise(errc::invalid_argument, "catoni_mean: alpha must be positive");
  }
  return detail::catoni_root(sample, params.alpha, nullptr);
}

double alpha_fixed_confidence(double v, std::size_t n, double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) raise(errc::invalid_argument, "delta must lie in (0,1)");
  return detail::alpha_from_log_term(v, n, std::log(1.0 / delta));
}

double alpha_simple(double v, std::size_t n) {
  if (!(v > 0.0)) raise(errc::non_positive_variance, "variance bound v must be positive");
  if (n < 1) raise(errc::invalid_argument, "n must be at least 1");
  return std::sqrt(2.0 / (static_cast<double>(n) * v));
}

double alpha_finite_class(double v, std::size_t n, double delta, std::size_t class_size) {
  if (!(delta > 0.0) || !(delta < 1.0)) raise(errc::invalid_argument, "delta must lie in (0,1)");
  if (class_size < 1) raise(errc::invalid_argument, "class_size must be at least 1");
  const double log_term = std::log(static_cast<double>(class_size)) + std::log(1.0 / delta);
  return detail::alpha_from_log_term(v, n, log_term);
}

double deviation_bound_fixed(double v, std::size_t n, double delta) {
  if (!(v > 0.0)) raise(errc::non_positive_variance, "variance bound v must be positive");
  if (!(delta > 0.0) || !(delta < 1.0)) raise(errc::invalid_argument, "delta must lie in (0,1)");
  const double nd = static_cast<double>(n);
  const double log_term = std::log(1.0 / delta);
  if (!(nd > 2.0 * log_term)) raise(errc::confidence_too_tight, "deviation_bound_fixed requires n > 2 log(1/delta)");
  return std::sqrt(2.0 * v * log_term / (nd * (1.0 - (2.0 / nd) * log_term)));
}

double deviation_bound_simple(double v, std::size_t n, double delta) {
  if (!(v > 0.0)) raise(errc::non_positive_variance, "variance bound v must be positive");
  if (!(delta > 0.0) || !(delta <= 1.0)) raise(errc::invalid_argument, "delta must lie in (0,1]");
  const double nd = static_cast<double>(n);
  const double log_term = std::log(1.0 / delta);
  if (!(nd > 4.0 * (1.0 + log_term))) {
    raise(errc::sample_too_small, "deviation_bound_simple requires n > 4 (1 + log(1/delta))");
  }
  return (1.0 + log_term) * std::sqrt(v / nd);
}

double median_of_means(std::span<const double> sample, std::size_t num_blocks) {
  const std::size_t n = sample.size();
  if (n == 0) raise(errc::empty_sample, "median_of_means: empty sample");
  if (num_blocks < 1 || num_blocks > n) raise(errc::bad_block_count, "median_of_means: need 1 <= num_blocks <= n");
  for (double x : sample) {
    if (!std::isfinite(x)) raise(errc::non_finite_input, "median_of_means: non-finite sample value");
  }

  std::vector<double> means;
  means.reserve(num_blocks);
  for (std::size_t b = 0; b < num_blocks; ++b) {
    const std::size_t begin = b * n / num_blocks;
    const std::size_t end = (b + 1) * n / num_blocks;
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += sample[i];
    means.push_back(s / static_cast<double>(end - begin));
  }
  std::sort(means.begin(), means.end());
  const std::size_t m = means.size();
  if (m % 2 == 1) return means[m / 2];
  return 0.5 * (means[m / 2 - 1] + means[m / 2]);
}

}  // namespace catoni
