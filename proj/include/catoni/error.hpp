#pragma once

#include <stdexcept>
#include <string>

namespace catoni {

// Error kinds surfaced by the library. The C API maps these one-to-one
// onto ct_status codes, so keep the list in sync with catoni.h.
enum class errc {
  ok = 0,
  invalid_argument,
  empty_sample,
  non_finite_input,
  confidence_too_tight,
  sample_too_small,
  bad_block_count,
  non_positive_variance,
  solvability_violated,
  insufficient_samples,
  quadrature_failure,
  no_convergence,
  degenerate_weights,
  no_initial_points,
  singular_design,
  bad_k,
  empty_codebook,
  bad_tail_index,
  not_positive_definite,
  missing_columns,
  io_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace catoni
