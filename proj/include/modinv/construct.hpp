#pragma once

#include <optional>
#include <vector>

#include "modinv/group.hpp"
#include "modinv/oracle.hpp"
#include "modinv/poly.hpp"

namespace modinv {

// Constructive generator presentations of S(V)^G for small p-groups:
// Nakajima chains, the fixed-variable elimination recursion, its Frobenius
// twist, block re-triangulation, the dimension-3 transvection machinery, and
// the dimension-4 pipeline built from all of the above.

struct Certificate {
  uint64_t degree_product = 0;
  Tri jacobian = Tri::skipped;
  std::optional<uint32_t> sop_witness_degree;
  bool invariance_checked = false;  // exhaustively over all group elements
};

struct Presentation {
  int ring_dim = 0;
  std::vector<Poly> gens;
  std::vector<uint32_t> degrees;
  uint64_t group_order = 0;
  Certificate certificate;
};

// x^p - (delta(g,x))^{p-1} x; g-invariant whenever delta(g, delta(g,x)) = 0.
Poly nakajima_step(const Poly& x, const Mat& g);

// Iterated steps over a generator list; every delta must stay inside the
// positive-degree part of the subalgebra generated by fixed_vars.
Poly nakajima_chain(const std::vector<Poly>& fixed_vars, const Poly& x,
                    const std::vector<Mat>& gens);

// Fixed-variable elimination: v a variable fixed by every generator, each
// delta(g, m_i) a scalar multiple of v^{deg m_i}; returns {v, y_2, ..., y_n}
// generating the invariants of F[v, m_2, ..., m_n].
std::vector<Poly> prop27_generators(const Poly& v, std::vector<Poly> ms,
                                    const std::vector<Mat>& gens);

// Frobenius-twisted variant for F[v^{p^{e_1}}, x_i^{p^{e_i}}]^G with
// non-decreasing exps (first entry is v's exponent).
std::vector<Poly> cor28_generators(const Poly& v, const std::vector<Poly>& vs,
                                   const std::vector<uint32_t>& exps,
                                   const std::vector<Mat>& gens);

// Re-triangulation of equal-degree blocks of subring generators: recombines
// xs into ys so that delta(g, y_i) lands in F[v^{p^{e1}}, y_2..y_{i-1}], with
// linear witnesses u_i (rows) satisfying y_i - u_i^{deg y_i} in v^{p^{e1}}S(V).
struct Retriangulated {
  std::vector<Poly> ys;
  std::vector<std::vector<Fq>> us;
};
Retriangulated retriangulate(int v_index, uint32_t e1, const std::vector<Poly>& xs,
                             const PGroup& G);

// Normal form of a dim-3 transvection group w.r.t. a flag: generators sorted
// into tau / sigma / epsilon shapes with F_p-independent slot entries.
struct Dim3Normalization {
  FlagBasis flag;
  std::vector<Mat> taus, sigmas, epsilons;  // flag-coordinate matrices
  // minimality witnesses: the F_p-independent slot entries, aligned by index
  std::vector<Fq> tau_entries, sigma_entries, epsilon_entries;
};
Dim3Normalization dim3_normalize(const PGroup& T, const FlagBasis& flag);

Presentation dim3_invariants(const PGroup& T, const FlagBasis& flag);
Presentation dim4_pipeline(const PGroup& G);

// Dimension dispatch (1-4); throws errc::unsupported beyond, and
// errc::not_transvection_generated when polynomiality is impossible.
Presentation construct_invariants(const PGroup& G);

// Certificate assembly: exhaustive invariance plus the degree-product/s.o.p.
// criterion; throws errc::verification_failed if the candidate is rejected.
Presentation certify(const PGroup& G, const std::vector<Poly>& gens);

// --- small helpers shared with the tests -----------------------------------

// Monomials of f use only p-power exponents of `var`, top power monic & pure.
bool is_monic_p_polynomial(const Poly& f, int var, uint32_t p);

// f mod (variable v) equals (sum_j u_j x_j)^{p^h}: recover u and h.
struct PurePowerResidue {
  std::vector<Fq> u;
  uint32_t h = 0;
};
std::optional<PurePowerResidue> pure_power_residue(const Poly& f, int v_index);

// terms of f with zero exponent on var i (arity preserved)
Poly set_variable_zero(const Poly& f, int var);

}  // namespace modinv
