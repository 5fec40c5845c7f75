#pragma once

#include <stdexcept>
#include <string>

namespace cansec {

// Library-wide error taxonomy. The CLI maps categories to exit codes, so
// every throw site picks the kind that callers dispatch on.
enum class errc {
  non_prime,
  zero_degree,
  field_mismatch,
  indeterminate_valuation,
  precision_exhausted,
  degree_overflow,
  annulus_violation,
  degenerate_input,
  not_a_unit,
  not_divisible,
  out_of_region,
  ordinary_point,
  out_of_range,
  inconsistent_input,
  grid_error,
  config_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace cansec
