#include "modinv/gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace modinv {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// --- dense F_p[x] helpers for the irreducibility check -----------------------

using PolyZp = std::vector<uint32_t>;  // c[0] + c[1] x + ...; no trailing zeros

void trim(PolyZp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyZp mulmod(const PolyZp& a, const PolyZp& b, const PolyZp& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyZp c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (uint64_t)a[i] * b[j]) % p;
  // reduce mod monic f
  size_t df = f.size() - 1;
  for (size_t i = c.size(); i-- > df;) {
    uint32_t q = c[i];
    if (q == 0) continue;
    c[i] = 0;
    for (size_t j = 0; j < df; ++j)
      c[i - df + j] = (c[i - df + j] + (uint64_t)q * (p - f[j] % p) % p) % p;
  }
  trim(c);
  return c;
}

PolyZp powmod(PolyZp base, uint64_t e, const PolyZp& f, uint32_t p) {
  PolyZp r = {1};
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PolyZp gcd(PolyZp a, PolyZp b, uint32_t p) {
  auto invmod = [&](uint32_t v) {
    uint32_t r = 1, x = v, e = p - 2;
    while (e) {
      if (e & 1) r = (uint64_t)r * x % p;
      x = (uint64_t)x * x % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b
    uint32_t lead_inv = invmod(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      uint32_t q = (uint64_t)a.back() * lead_inv % p;
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[shift + j] = (a[shift + j] + (uint64_t)q * (p - b[j] % p) % p) % p;
      trim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin's test: monic f of degree k is irreducible over F_p iff
// x^{p^k} == x (mod f) and gcd(x^{p^{k/q}} - x, f) = 1 for every prime q | k.
bool irreducible(const PolyZp& f, uint32_t p) {
  size_t k = f.size() - 1;
  auto frob_power = [&](uint64_t e) {
    // x^{p^e} mod f by repeated p-th powering
    PolyZp x = {0, 1};
    PolyZp r = x;
    for (uint64_t i = 0; i < e; ++i) r = powmod(r, p, f, p);
    return r;
  };
  PolyZp top = frob_power(k);
  PolyZp x = {0, 1};
  // top must equal x
  if (top != x) return false;
  std::vector<uint64_t> prime_divs;
  uint64_t kk = k;
  for (uint64_t q = 2; q * q <= kk; ++q)
    while (kk % q == 0) {
      if (prime_divs.empty() || prime_divs.back() != q) prime_divs.push_back(q);
      kk /= q;
    }
  if (kk > 1) prime_divs.push_back(kk);
  for (uint64_t q : prime_divs) {
    PolyZp h = frob_power(k / q);
    // h - x
    PolyZp d = h;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    PolyZp g = gcd(f, d, p);
    if (g.size() != 1) return false;  // nontrivial common factor
  }
  return true;
}

uint32_t fnv_hash(uint32_t p, int k, const std::array<uint32_t, kMaxFieldDeg>& tail) {
  uint32_t h = 2166136261u;
  auto mix = [&](uint32_t v) {
    h ^= v;
    h *= 16777619u;
  };
  mix(p);
  mix((uint32_t)k);
  for (int i = 0; i < kMaxFieldDeg; ++i) mix(tail[i]);
  return h;
}

}  // namespace

FieldPtr FieldCtx::make(uint32_t p) {
  if (p >= (1u << 16)) fail(errc::non_prime, "characteristic must be < 2^16");
  if (!is_prime_u32(p)) fail(errc::non_prime, "p = " + std::to_string(p) + " is not prime");
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx);
  ctx->p_ = p;
  ctx->k_ = 1;
  ctx->tag_ = fnv_hash(p, 1, ctx->mod_tail_);
  ctx->zero_ = ctx->raw({});
  std::array<uint32_t, kMaxFieldDeg> o{};
  o[0] = 1 % p;
  ctx->one_ = ctx->raw(o);
  return ctx;
}

FieldPtr FieldCtx::make(uint32_t p, const std::vector<uint32_t>& modulus_coeffs) {
  if (p >= (1u << 16)) fail(errc::non_prime, "characteristic must be < 2^16");
  if (!is_prime_u32(p)) fail(errc::non_prime, "p = " + std::to_string(p) + " is not prime");
  PolyZp f(modulus_coeffs.size());
  for (size_t i = 0; i < f.size(); ++i) f[i] = modulus_coeffs[i] % p;
  trim(f);
  int k = (int)f.size() - 1;
  if (k < 2 || k > kMaxFieldDeg)
    fail(errc::reducible_modulus, "modulus degree must be between 2 and " + std::to_string(kMaxFieldDeg));
  if (f.back() != 1) fail(errc::reducible_modulus, "modulus must be monic");
  if (!irreducible(f, p)) fail(errc::reducible_modulus, "modulus is reducible over F_p");
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx);
  ctx->p_ = p;
  ctx->k_ = k;
  for (int i = 0; i < k; ++i) ctx->mod_tail_[i] = f[i];
  ctx->tag_ = fnv_hash(p, k, ctx->mod_tail_);
  ctx->zero_ = ctx->raw({});
  std::array<uint32_t, kMaxFieldDeg> o{};
  o[0] = 1;
  ctx->one_ = ctx->raw(o);
  return ctx;
}

uint64_t FieldCtx::size() const {
  uint64_t s = 1;
  for (int i = 0; i < k_; ++i) s *= p_;
  return s;
}

bool FieldCtx::same(const FieldCtx& o) const {
  return p_ == o.p_ && k_ == o.k_ && mod_tail_ == o.mod_tail_;
}

std::vector<uint32_t> FieldCtx::modulus_tail() const {
  if (k_ == 1) return {};
  return std::vector<uint32_t>(mod_tail_.begin(), mod_tail_.begin() + k_);
}

Fq FieldCtx::raw(const std::array<uint32_t, kMaxFieldDeg>& c) const {
  Fq a;
  a.c = c;
  a.tag = tag_;
  return a;
}

Fq FieldCtx::zero() const { return zero_; }
Fq FieldCtx::one() const { return one_; }

Fq FieldCtx::from_int(long long v) const {
  long long r = v % (long long)p_;
  if (r < 0) r += p_;
  std::array<uint32_t, kMaxFieldDeg> c{};
  c[0] = (uint32_t)r;
  return raw(c);
}

Fq FieldCtx::element(const std::vector<uint32_t>& coords) const {
  if ((int)coords.size() > k_) fail(errc::context_mismatch, "coordinate vector longer than field degree");
  std::array<uint32_t, kMaxFieldDeg> c{};
  for (size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] % p_;
  return raw(c);
}

Fq FieldCtx::add(const Fq& a, const Fq& b) const {
  check(a);
  check(b);
  std::array<uint32_t, kMaxFieldDeg> c{};
  for (int i = 0; i < k_; ++i) {
    uint32_t s = a.c[i] + b.c[i];
    c[i] = s >= p_ ? s - p_ : s;
  }
  return raw(c);
}

Fq FieldCtx::sub(const Fq& a, const Fq& b) const {
  check(a);
  check(b);
  std::array<uint32_t, kMaxFieldDeg> c{};
  for (int i = 0; i < k_; ++i) {
    uint32_t s = a.c[i] + p_ - b.c[i];
    c[i] = s >= p_ ? s - p_ : s;
  }
  return raw(c);
}

Fq FieldCtx::neg(const Fq& a) const { return sub(zero_, a); }

Fq FieldCtx::mul(const Fq& a, const Fq& b) const {
  check(a);
  check(b);
  if (k_ == 1) {
    std::array<uint32_t, kMaxFieldDeg> c{};
    c[0] = (uint32_t)((uint64_t)a.c[0] * b.c[0] % p_);
    return raw(c);
  }
  // schoolbook product then reduction by the monic modulus
  uint64_t prod[2 * kMaxFieldDeg - 1] = {0};
  for (int i = 0; i < k_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] += (uint64_t)a.c[i] * b.c[j];
  }
  for (int m = 2 * k_ - 2; m >= k_; --m) {
    uint64_t q = prod[m] % p_;
    prod[m] = 0;
    if (q == 0) continue;
    // t^m = t^{m-k} * (-(tail))
    for (int j = 0; j < k_; ++j)
      prod[m - k_ + j] += q * ((p_ - mod_tail_[j]) % p_);
  }
  std::array<uint32_t, kMaxFieldDeg> c{};
  for (int i = 0; i < k_; ++i) c[i] = (uint32_t)(prod[i] % p_);
  return raw(c);
}

Fq FieldCtx::pow(const Fq& a, uint64_t e) const {
  check(a);
  Fq r = one_;
  Fq base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq FieldCtx::inv(const Fq& a) const {
  check(a);
  if (is_zero(a)) fail(errc::divide_by_zero, "inverse of zero");
  return pow(a, size() - 2);
}

Fq FieldCtx::div(const Fq& a, const Fq& b) const {
  check(a);
  check(b);
  if (is_zero(b)) fail(errc::divide_by_zero, "division by zero");
  return mul(a, inv(b));
}

Fq FieldCtx::pth_root(const Fq& a) const {
  check(a);
  uint64_t e = 1;
  for (int i = 0; i < k_ - 1; ++i) e *= p_;
  return pow(a, e);
}

std::vector<Fq> FieldCtx::all_elements() const {
  std::vector<Fq> out;
  out.reserve((size_t)size());
  std::array<uint32_t, kMaxFieldDeg> c{};
  for (;;) {
    out.push_back(raw(c));
    int i = 0;
    while (i < k_ && ++c[i] == p_) c[i++] = 0;
    if (i == k_) break;
  }
  return out;
}

std::string FieldCtx::to_string(const Fq& a) const {
  check(a);
  std::ostringstream os;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << a.c[i];
    } else {
      if (a.c[i] != 1) os << a.c[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Shared scanner for integer polynomials in t.  Returns coefficients c_0..c_d
// reduced mod p; rejects everything outside the tiny grammar.
std::vector<uint32_t> scan_t_poly(const std::string& text, uint32_t p) {
  std::string s;
  for (char ch : text)
    if (!std::isspace((unsigned char)ch)) s.push_back(ch);
  if (s.empty()) fail(errc::parse_error, "empty field element");
  std::vector<uint32_t> coeffs;
  auto bump = [&](size_t e, uint32_t v) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    coeffs[e] = (coeffs[e] + v) % p;
  };
  size_t i = 0;
  bool first_term = true;
  while (i < s.size()) {
    uint32_t sign = 1;  // 1 or p-1
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = p - 1;
      ++i;
    } else if (!first_term) {
      fail(errc::parse_error, "expected '+' or '-' in '" + text + "'");
    }
    first_term = false;
    if (i >= s.size()) fail(errc::parse_error, "dangling sign in '" + text + "'");
    uint64_t coef = 1;
    bool saw_digits = false;
    if (std::isdigit((unsigned char)s[i])) {
      coef = 0;
      saw_digits = true;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        coef = (coef * 10 + (uint64_t)(s[i] - '0')) % p;  // reduce as we go
        ++i;
      }
    }
    size_t expn = 0;
    if (i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 't') fail(errc::parse_error, "expected t after '*' in '" + text + "'");
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      expn = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
          fail(errc::parse_error, "expected exponent digits in '" + text + "'");
        size_t e = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
          e = e * 10 + (size_t)(s[i] - '0');
          if (e > 64) fail(errc::parse_error, "exponent too large in '" + text + "'");
          ++i;
        }
        expn = e;
      }
    } else if (!saw_digits) {
      fail(errc::parse_error, "unexpected character '" + std::string(1, s[i]) + "' in '" + text + "'");
    }
    bump(expn, (uint32_t)((coef % p) * sign % p));
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(0);
  return coeffs;
}

}  // namespace

std::vector<uint32_t> parse_modulus_text(const std::string& text, uint32_t p) {
  return scan_t_poly(text, p);
}

std::string modulus_to_string(const std::vector<uint32_t>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (size_t ii = coeffs.size(); ii-- > 0;) {
    if (coeffs[ii] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (ii == 0) {
      os << coeffs[ii];
    } else {
      if (coeffs[ii] != 1) os << coeffs[ii] << "*";
      os << "t";
      if (ii > 1) os << "^" << ii;
    }
  }
  if (first) os << "0";
  return os.str();
}

Fq FieldCtx::parse(const std::string& text) const {
  std::vector<uint32_t> cs = scan_t_poly(text, p_);
  if ((int)cs.size() > k_) {
    // reduce by the modulus: t^k = -(tail)
    std::vector<uint64_t> acc(cs.begin(), cs.end());
    for (size_t m = acc.size(); m-- > (size_t)k_;) {
      uint64_t q = acc[m] % p_;
      acc[m] = 0;
      if (q == 0) continue;
      for (int j = 0; j < k_; ++j) acc[m - k_ + j] += q * ((p_ - mod_tail_[j]) % p_);
    }
    std::array<uint32_t, kMaxFieldDeg> c{};
    for (int i = 0; i < k_; ++i) c[i] = (uint32_t)(acc[i] % p_);
    return raw(c);
  }
  std::array<uint32_t, kMaxFieldDeg> c{};
  for (size_t i = 0; i < cs.size(); ++i) c[i] = cs[i];
  return raw(c);
}

}  // namespace modinv
