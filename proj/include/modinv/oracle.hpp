#pragma once

#include <map>
#include <optional>
#include <vector>

#include "modinv/group.hpp"
#include "modinv/poly.hpp"

namespace modinv {

// Construction-independent verification by graded linear algebra: invariant
// space bases, s.o.p. certification, the degree-product criterion, minimal
// generator counting, and invariant lifting.

enum class Tri { skipped, nonzero, zero };

struct SopResult {
  bool is_sop = false;
  std::optional<uint32_t> witness_degree;
};

enum class KemperReason {
  none,
  wrong_count,
  not_homogeneous,
  not_invariant,
  degree_product,
  not_sop,
};
const char* kemper_reason_name(KemperReason r);

struct KemperResult {
  bool polynomial = false;
  KemperReason reason = KemperReason::none;
  uint64_t degree_product = 0;
  Tri jacobian = Tri::skipped;
  std::optional<uint32_t> sop_witness;
};

struct GradedReport {
  std::vector<uint32_t> degrees;        // 0..D
  std::vector<uint32_t> dims;           // dim S(V)^G_d
  std::vector<uint32_t> mingen_counts;  // new algebra generators needed at d
};

// Canonical basis of the degree-d invariants: kernel of the stacked maps
// f -> delta(g, f) over the generators, in the monomial basis.
std::vector<Poly> invariant_space_basis(const PGroup& G, uint32_t d);
uint32_t invariant_space_dim(const PGroup& G, uint32_t d);

bool is_invariant(const Poly& f, const PGroup& G, bool exhaustive = false);

// fs form an s.o.p. iff their ideal contains the full graded piece at some
// degree <= sum(deg f_i - 1) + 1 (complete-intersection Hilbert series bound).
SopResult sop_check(const std::vector<Poly>& fs);

KemperResult kemper_criterion(const PGroup& G, const std::vector<Poly>& fs);

GradedReport minimal_generator_report(const PGroup& G, uint32_t D);

// Homogeneous G-invariant f of degree d with quotient_mod_variable(f, v_index)
// equal to target; errc::lift_failed if no such invariant exists.
Poly lift_invariant(const PGroup& G, const Poly& target, int v_index, uint32_t d);

// Coefficients of prod 1/(1 - t^{deg_i}) up to degree D.
std::vector<uint64_t> hilbert_series_coeffs(const std::vector<uint32_t>& degs, uint32_t D);

// Graded dimensions of the free polynomial ring on `degrees` versus the actual
// invariant ring, for every d <= D.
bool hilbert_check(const PGroup& G, const std::vector<uint32_t>& degrees, uint32_t D,
                   uint32_t* first_mismatch = nullptr);

// Membership and representation in the subalgebra generated by fixed
// homogeneous elements, decided degreewise by linear algebra.
class SubringBasis {
 public:
  explicit SubringBasis(std::vector<Poly> gens);
  const std::vector<Poly>& gens() const { return gens_; }
  // f rewritten as a polynomial in the subring generators (one variable per
  // generator, in order), or nullopt if f is not in the subalgebra.
  std::optional<Poly> express(const Poly& f);
  bool contains(const Poly& f) { return express(f).has_value(); }

 private:
  std::optional<Poly> express_homogeneous(const Poly& f, uint32_t d);
  const Poly& gen_power(size_t i, uint32_t e);
  std::vector<Poly> gens_;
  std::vector<uint32_t> degs_;
  std::map<std::pair<size_t, uint32_t>, Poly> pow_cache_;
};

}  // namespace modinv
