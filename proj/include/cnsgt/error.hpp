#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cnsgt {

enum class Errc {
  invalid_group,
  invalid_element,
  side_mismatch,
  group_mismatch,
  family_mismatch,
  shape_mismatch,
  not_invertible,
  not_a_frame,
  size_guard,
  invalid_spec,
  invalid_warp,
  singular_point,
  domain,
  form,
  numeric,
  parse,
};

std::string_view to_string(Errc code) noexcept;

/// Base error for every failure raised by the library. The code identifies
/// the contract that was violated; the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised when a symbol is too close to singular to invert (or, for Psi = Phi,
/// when the family is not a frame). Carries the symbol's extreme magnitudes.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(Errc code, double min_abs, double max_abs, double rel_tol);

  double min_abs() const noexcept { return min_abs_; }
  double max_abs() const noexcept { return max_abs_; }

 private:
  double min_abs_;
  double max_abs_;
};

}  // namespace cnsgt
