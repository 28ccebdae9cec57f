#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "modinv/linalg.hpp"

namespace modinv {

// Sparse multivariate polynomials over a FieldCtx.  Term order is graded lex
// (higher total degree first; ties by exponent vector, x_1 > x_2 > ...),
// descending, everywhere: iteration, serialization, basis enumeration.

inline constexpr uint32_t kDegreeCap = 1u << 20;

struct Monomial {
  std::vector<uint32_t> e;

  uint32_t degree() const {
    uint32_t d = 0;
    for (uint32_t x : e) d += x;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Fq, GradedLexGreater>;

  Poly() = default;
  Poly(FieldPtr F, int nvars) : F_(std::move(F)), n_(nvars) {}
  static Poly zero(FieldPtr F, int nvars) { return Poly(std::move(F), nvars); }
  static Poly constant(FieldPtr F, int nvars, const Fq& c);
  static Poly variable(FieldPtr F, int nvars, int i);

  const FieldPtr& field() const { return F_; }
  int nvars() const { return n_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  uint32_t degree() const;  // max term degree; 0 for the zero polynomial
  std::optional<uint32_t> homogeneous_degree() const;  // absent if not homogeneous or zero
  Fq coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Fq& c);  // accumulate, prune zeros

  bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly add(const Poly& o) const;
  Poly sub(const Poly& o) const;
  Poly neg() const;
  Poly mul(const Poly& o) const;
  Poly scale(const Fq& c) const;
  Poly pow(uint64_t e) const;            // repeated squaring
  Poly frobenius_pow(uint32_t e) const;  // f^{p^e}, termwise (exact in char p)
  Poly mul_variable_power(int var, uint32_t e) const;

  // Graded algebra endomorphism sending variable i to the linear form in row i.
  Poly apply_matrix(const Mat& g) const;
  Poly delta(const Mat& g) const;  // apply_matrix(g, f) - f
  Poly partial(int var) const;     // formal derivative, char-p rule
  // Set variable i to zero and drop it (result lives in nvars-1 variables).
  Poly quotient_mod_variable(int var) const;
  // True iff every monomial with nonzero coefficient is divisible by var^e.
  bool divisible_by_variable_power(int var, uint32_t e) const;

 private:
  void check_ring(const Poly& o) const;
  FieldPtr F_;
  int n_ = 0;
  TermMap t_;
};

// Substitution endomorphism for a fixed matrix with power memoization shared
// across many applications (the oracle applies one matrix to whole monomial
// bases).
class MatrixAction {
 public:
  MatrixAction(const Mat& g, int nvars);
  Poly apply(const Poly& f);
  Poly apply_monomial(const Monomial& m);

 private:
  const Poly& form_power(int i, uint32_t e);
  FieldPtr F_;
  int n_;
  std::vector<Poly> forms_;
  std::vector<std::map<uint32_t, Poly>> pows_;
};

// All monomials of the given degree, graded-lex descending; C(d+n-1, n-1) many.
std::vector<Monomial> graded_piece(int nvars, uint32_t d);

// Determinant of (d f_i / d x_j); n <= 8 by cofactor expansion.
Poly jacobian_det(const std::vector<Poly>& fs);

// Coefficient vector of f with respect to an explicit monomial list.
std::vector<Fq> coeff_vector(const Poly& f, const std::vector<Monomial>& basis);
Poly poly_from_coeffs(FieldPtr F, int nvars, const std::vector<Monomial>& basis,
                      const std::vector<Fq>& coeffs);

}  // namespace modinv
