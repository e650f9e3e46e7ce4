#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace constaspec {

/// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class Errc {
  bound_exceeded,
  not_prime,
  not_coprime,
  precondition_failed,
  division_by_zero,
  field_mismatch,
  zero_element,
  order_not_dividing,
  not_subfield_power,
  zero_constant_term,
  not_monic,
  not_square_field,
  repeated_root,
  zero_lambda,
  budget_exceeded,
  not_a_divisor,
  kind_mismatch,
  enumeration_cap,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace constaspec
