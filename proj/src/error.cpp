#include "constaspec/error.hpp"

namespace constaspec {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::not_prime: return "NotPrime";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::zero_element: return "ZeroElement";
    case Errc::order_not_dividing: return "OrderNotDividing";
    case Errc::not_subfield_power: return "NotSubfieldPower";
    case Errc::zero_constant_term: return "ZeroConstantTerm";
    case Errc::not_monic: return "NotMonic";
    case Errc::not_square_field: return "NotSquareField";
    case Errc::repeated_root: return "RepeatedRoot";
    case Errc::zero_lambda: return "ZeroLambda";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::enumeration_cap: return "EnumerationCap";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace constaspec
