#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatspin {

enum class Errc {
  signature_mismatch,
  grade_out_of_range,
  null_vector,
  not_a_vector,
  non_scalar_square,
  invalid_signature,
  pole_singularity,
  domain_violation,
  not_in_ideal,
  degenerate_state,
  non_timelike,
  tag_mismatch,
  zero_q0,
  not_orthogonal,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::signature_mismatch: return "SignatureMismatch";
  case Errc::grade_out_of_range: return "GradeOutOfRange";
  case Errc::null_vector: return "NullVector";
  case Errc::not_a_vector: return "NotAVector";
  case Errc::non_scalar_square: return "NonScalarSquare";
  case Errc::invalid_signature: return "InvalidSignature";
  case Errc::pole_singularity: return "PoleSingularity";
  case Errc::domain_violation: return "DomainViolation";
  case Errc::not_in_ideal: return "NotInIdeal";
  case Errc::degenerate_state: return "DegenerateState";
  case Errc::non_timelike: return "NonTimelike";
  case Errc::tag_mismatch: return "TagMismatch";
  case Errc::zero_q0: return "ZeroQ0";
  case Errc::not_orthogonal: return "NotOrthogonal";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the condition;
/// `what()` starts with the condition name.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace quatspin
