#pragma once

#include <stdexcept>
#include <string>

namespace itercert {

// Error categories raised by the library. The CLI maps these to the stable
// diagnostic prefixes (E_DIM, E_SINGULAR, E_EIG, E_IO, E_USAGE) and exit codes.
enum class errc {
  dimension_mismatch,
  index_out_of_range,
  singular_matrix,
  zero_diagonal,
  division_by_zero,
  convergence_failure,
  negative_product,
  domain_error,
  non_positive_term,
  insufficient_data,
  io_error,
  usage_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Stable short code for diagnostics, e.g. "E_SINGULAR".
inline const char* error_label(errc code) {
  switch (code) {
    case errc::dimension_mismatch:
    case errc::index_out_of_range:
      return "E_DIM";
    case errc::singular_matrix:
    case errc::zero_diagonal:
    case errc::division_by_zero:
      return "E_SINGULAR";
    case errc::convergence_failure:
      return "E_EIG";
    case errc::io_error:
      return "E_IO";
    case errc::usage_error:
      return "E_USAGE";
    case errc::negative_product:
    case errc::domain_error:
    case errc::non_positive_term:
    case errc::insufficient_data:
      return "E_DOMAIN";
  }
  return "E_UNKNOWN";
}

}  // namespace itercert
