#pragma once

#include <optional>
#include <vector>

#include "modinv/gf.hpp"

namespace modinv {

// Dense exact linear algebra over a FieldCtx.  Everything uses deterministic
// pivoting (first nonzero entry in column-major scan order), so reduced forms
// and kernel bases are canonical.

class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr F, int rows, int cols);
  static Mat identity(FieldPtr F, int n);
  static Mat from_rows(FieldPtr F, const std::vector<std::vector<Fq>>& rows);

  const FieldPtr& field() const { return F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fq& at(int i, int j) { return a_[(size_t)i * cols_ + j]; }
  const Fq& at(int i, int j) const { return a_[(size_t)i * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  // deterministic total order on same-shape matrices (entry-wise lexicographic)
  bool lex_less(const Mat& o) const { return a_ < o.a_; }

  Mat mul(const Mat& o) const;
  Mat add(const Mat& o) const;
  Mat sub(const Mat& o) const;
  Mat transpose() const;
  Mat inverse() const;  // errc::singular_generator if singular
  bool is_identity() const;
  bool is_zero() const;

  std::vector<Fq> row(int i) const;
  void set_row(int i, const std::vector<Fq>& v);
  // v * this for a row vector v
  std::vector<Fq> apply_row(const std::vector<Fq>& v) const;

  Mat vstack(const Mat& below) const;

 private:
  FieldPtr F_;
  int rows_ = 0, cols_ = 0;
  std::vector<Fq> a_;
};

struct Echelon {
  Mat R;                        // reduced row echelon form
  std::vector<int> pivot_cols;  // ascending
  int rank = 0;
};

Echelon rref(const Mat& A);

// Rows form the canonical basis of {x : A x^T = 0}; ordered by free column.
Mat null_space(const Mat& A);

// Particular solution of A x^T = b^T with free variables set to zero.
std::optional<std::vector<Fq>> solve(const Mat& A, const std::vector<Fq>& b);

int rank_of(const Mat& A);
Fq det(const Mat& A);

// Canonical row-space form: rref with zero rows dropped.
Mat row_space(const Mat& A);
// Membership of v in the row space of an already-reduced matrix R.
bool in_row_space(const Echelon& E, const std::vector<Fq>& v);
// Reduce v against an echelon form (returns the residue).
std::vector<Fq> reduce_against(const Echelon& E, std::vector<Fq> v);

}  // namespace modinv
