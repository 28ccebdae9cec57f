#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modinv/errors.hpp"

namespace modinv {

// Small finite fields F_{p^k}: p prime < 2^16, 1 <= k <= 4, extensions given
// by an explicit monic irreducible modulus.  Elements are coordinate vectors
// in the power basis of the modulus root t.

inline constexpr int kMaxFieldDeg = 4;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// Value type.  Identity (==, <) is the coordinate vector alone; the tag is a
// structural hash of the owning context used only to detect cross-context use.
struct Fq {
  std::array<uint32_t, kMaxFieldDeg> c{};
  uint32_t tag = 0;

  bool operator==(const Fq& o) const { return c == o.c; }
  bool operator!=(const Fq& o) const { return c != o.c; }
  bool operator<(const Fq& o) const { return c < o.c; }  // deterministic sort order
};

class FieldCtx {
 public:
  // Prime field F_p.
  static FieldPtr make(uint32_t p);
  // Extension field; modulus_coeffs lists c_0..c_k of a monic irreducible
  // c_0 + c_1 t + ... + c_k t^k with 2 <= k <= 4.
  static FieldPtr make(uint32_t p, const std::vector<uint32_t>& modulus_coeffs);

  uint32_t p() const { return p_; }
  int k() const { return k_; }
  uint64_t size() const;  // p^k
  uint32_t tag() const { return tag_; }
  bool same(const FieldCtx& o) const;  // structural equality (p and modulus)
  // Modulus coefficients c_0..c_{k-1} (the monic head is implicit); empty for k=1.
  std::vector<uint32_t> modulus_tail() const;

  Fq zero() const;
  Fq one() const;
  Fq from_int(long long v) const;                      // image of an integer
  Fq element(const std::vector<uint32_t>& coords) const;  // coords c_0..c_{k-1}

  bool is_zero(const Fq& a) const { return a == zero_; }
  Fq add(const Fq& a, const Fq& b) const;
  Fq sub(const Fq& a, const Fq& b) const;
  Fq neg(const Fq& a) const;
  Fq mul(const Fq& a, const Fq& b) const;
  Fq inv(const Fq& a) const;
  Fq div(const Fq& a, const Fq& b) const;
  Fq pow(const Fq& a, uint64_t e) const;
  // Inverse of Frobenius x -> x^p; equals a^{p^{k-1}} since the field is perfect.
  Fq pth_root(const Fq& a) const;

  // All p^k elements in deterministic counting order (c_{k-1} most significant).
  std::vector<Fq> all_elements() const;

  // Field-element text syntax: integer polynomials in `t`, e.g. "0", "2",
  // "t+1", "2*t+2".  parse accepts '-' and exponents up to 2k and reduces.
  std::string to_string(const Fq& a) const;
  Fq parse(const std::string& text) const;

 private:
  FieldCtx() = default;
  void check(const Fq& a) const {
    if (a.tag != tag_) fail(errc::context_mismatch, "element belongs to a different field context");
  }
  Fq raw(const std::array<uint32_t, kMaxFieldDeg>& c) const;

  uint32_t p_ = 0;
  int k_ = 1;
  std::array<uint32_t, kMaxFieldDeg> mod_tail_{};  // modulus minus its monic head
  uint32_t tag_ = 0;
  Fq zero_{}, one_{};
};

// Parse "t^2+t+1" style integer polynomials in t (used for the field= line of
// group-spec files); returns coefficients c_0..c_deg reduced mod p.
std::vector<uint32_t> parse_modulus_text(const std::string& text, uint32_t p);
std::string modulus_to_string(const std::vector<uint32_t>& coeffs);

bool is_prime_u32(uint32_t n);

}  // namespace modinv
