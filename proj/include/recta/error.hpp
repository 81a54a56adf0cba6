#pragma once

#include <stdexcept>
#include <string>

namespace recta {

// Error categories shared across the library. These map 1:1 onto the
// failure modes a caller can act on; anything else is a plain logic_error.
enum class errc {
  length_mismatch,
  degree_mismatch,
  dimension_too_large,
  quotient_too_large,
  loops,
  disconnected,
  too_large,
  not_transitive,
  not_automorphism,
  not_even,
  hypotheses_fail,
  inconsistent,
  non_linear_kernel,
  not_locally_triangular,
  n_too_small,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::length_mismatch: return "LENGTH_MISMATCH";
    case errc::degree_mismatch: return "DEGREE_MISMATCH";
    case errc::dimension_too_large: return "DIMENSION_TOO_LARGE";
    case errc::quotient_too_large: return "QUOTIENT_TOO_LARGE";
    case errc::loops: return "LOOPS";
    case errc::disconnected: return "DISCONNECTED";
    case errc::too_large: return "TOO_LARGE";
    case errc::not_transitive: return "NOT_TRANSITIVE";
    case errc::not_automorphism: return "NOT_AUTOMORPHISM";
    case errc::not_even: return "NOT_EVEN";
    case errc::hypotheses_fail: return "HYPOTHESES_FAIL";
    case errc::inconsistent: return "INCONSISTENT";
    case errc::non_linear_kernel: return "NON_LINEAR_KERNEL";
    case errc::not_locally_triangular: return "NOT_LOCALLY_TRIANGULAR";
    case errc::n_too_small: return "N_TOO_SMALL";
    case errc::bad_input: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace recta
