#pragma once

#include <stdexcept>
#include <string>

namespace modinv {

// Every failure the library can signal.  Codes double as stable strings in
// CLI diagnostics, so scripts can dispatch on them.
enum class errc {
  non_prime,
  reducible_modulus,
  divide_by_zero,
  context_mismatch,
  ring_mismatch,
  cap_exceeded,
  not_homogeneous,
  wrong_count,
  not_p_group,
  singular_generator,
  not_fixed_vector,
  hypothesis_violated,
  subring_not_stable,
  not_transvection_generated,
  not_dimension_3,
  not_dimension_4,
  normalization_failed,
  zero_theta_pivot,
  lift_failed,
  case_dispatch_failed,
  verification_failed,
  unsupported,
  parse_error,
  wrong_generator_count,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime: return "NonPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::divide_by_zero: return "DivideByZero";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::wrong_count: return "WrongCount";
    case errc::not_p_group: return "NotPGroup";
    case errc::singular_generator: return "SingularGenerator";
    case errc::not_fixed_vector: return "NotFixedVector";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::subring_not_stable: return "SubringNotStable";
    case errc::not_transvection_generated: return "NotTransvectionGenerated";
    case errc::not_dimension_3: return "NotDimension3";
    case errc::not_dimension_4: return "NotDimension4";
    case errc::normalization_failed: return "NormalizationFailed";
    case errc::zero_theta_pivot: return "ZeroThetaPivot";
    case errc::lift_failed: return "LiftFailed";
    case errc::case_dispatch_failed: return "CaseDispatchFailed";
    case errc::verification_failed: return "VerificationFailed";
    case errc::unsupported: return "Unsupported";
    case errc::parse_error: return "ParseError";
    case errc::wrong_generator_count: return "WrongGeneratorCount";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace modinv
