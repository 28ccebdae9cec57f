#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modinv/linalg.hpp"

namespace modinv {

// Finite p-subgroups of GL(V) over a FieldCtx, fully enumerated.  Matrices act
// on the right on row vectors: row i of a matrix is the image of basis vector i.

inline constexpr uint64_t kGroupCap = 1u << 20;

struct PGroup {
  FieldPtr F;
  int dim = 0;
  std::vector<Mat> gens;      // as supplied (validated invertible)
  std::vector<Mat> elements;  // closed, sorted entry-lexicographically
  uint64_t order = 0;

  uint32_t p() const { return F->p(); }
  bool contains(const Mat& m) const;
};

struct FlagBasis {
  // Rows of `vectors` are the flag basis in the original coordinates, first
  // row fixed by the whole group; (g-1) maps each row into the span of the
  // earlier ones.  change_of_basis = vectors^{-1} sends old coordinates to
  // flag coordinates.
  Mat vectors;
  Mat change_of_basis;

  // Conjugate of a group matrix into flag coordinates (lower unitriangular).
  Mat to_flag_coords(const Mat& m) const { return vectors.mul(m).mul(change_of_basis); }
};

PGroup group_enumerate(const std::vector<Mat>& gens, uint64_t cap = kGroupCap);
// Rebuild a PGroup from an already-closed element set (subgroups, quotients).
PGroup group_from_elements(FieldPtr F, int dim, std::vector<Mat> gens, std::vector<Mat> elements);

bool is_pseudo_reflection(const Mat& g);
bool is_transvection(const Mat& g);
bool generated_by_transvections(const PGroup& G);
std::vector<Mat> transvections_in(const PGroup& G);  // non-identity transvections

// rref basis (rows) of the common fixed space V^G.
Mat fixed_space(const PGroup& G);
FlagBasis triangulating_basis(const PGroup& G);
// Same flag algorithm on a bare matrix list (used for induced block actions).
FlagBasis triangulating_flag(const FieldPtr& F, int n, const std::vector<Mat>& gens);

// Subgroup {g : (g-1)(V) contained in the row space of W}.
PGroup pointwise_stabilizer(const PGroup& G, const Mat& W);

// Action on V^* written with dual basis names in the same positions as the
// primal ones: M maps to J (M^{-1})^T J, J the index-reversal permutation.
PGroup dual_group(const PGroup& G);
Mat dual_matrix(const Mat& m);

// For fixed v: H = {g : (g-1)V in Fv} and the faithful induced group on V/Fv.
// Quotient coordinates drop the pivot coordinate of v.
struct QuotientSplit {
  PGroup H;
  PGroup Gbar;
  int dropped_coord = 0;  // index of v's pivot coordinate in V
};
QuotientSplit quotient_action_kernel(const PGroup& G, const std::vector<Fq>& v);

std::vector<Mat> commutator_generators(const PGroup& G);
bool is_abelian(const PGroup& G);
bool is_elementary_abelian(const PGroup& G);

// The whole group conjugated into a new basis: rows of C are the new basis
// vectors; each matrix M becomes C M C^{-1}.
PGroup conjugated_group(const PGroup& G, const Mat& C);

}  // namespace modinv
