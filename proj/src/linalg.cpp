#include "modinv/linalg.hpp"

namespace modinv {

Mat::Mat(FieldPtr F, int rows, int cols) : F_(std::move(F)), rows_(rows), cols_(cols) {
  a_.assign((size_t)rows_ * cols_, F_->zero());
}

Mat Mat::identity(FieldPtr F, int n) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
  return m;
}

Mat Mat::from_rows(FieldPtr F, const std::vector<std::vector<Fq>>& rows) {
  int r = (int)rows.size();
  int c = r ? (int)rows[0].size() : 0;
  Mat m(F, r, c);
  for (int i = 0; i < r; ++i) {
    if ((int)rows[i].size() != c) fail(errc::wrong_count, "ragged rows in matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::mul(const Mat& o) const {
  if (cols_ != o.rows_) fail(errc::wrong_count, "matrix shape mismatch in mul");
  if (!F_->same(*o.F_)) fail(errc::context_mismatch, "matrix fields differ");
  Mat r(F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Fq& ail = at(i, l);
      if (F_->is_zero(ail)) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = F_->add(r.at(i, j), F_->mul(ail, o.at(l, j)));
    }
  return r;
}

Mat Mat::add(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::wrong_count, "matrix shape mismatch in add");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::sub(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::wrong_count, "matrix shape mismatch in sub");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::transpose() const {
  Mat r(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? F_->one() : F_->zero())) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const Fq& x : a_)
    if (!F_->is_zero(x)) return false;
  return true;
}

std::vector<Fq> Mat::row(int i) const {
  return std::vector<Fq>(a_.begin() + (size_t)i * cols_, a_.begin() + (size_t)(i + 1) * cols_);
}

void Mat::set_row(int i, const std::vector<Fq>& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

std::vector<Fq> Mat::apply_row(const std::vector<Fq>& v) const {
  if ((int)v.size() != rows_) fail(errc::wrong_count, "row vector length mismatch");
  std::vector<Fq> r(cols_, F_->zero());
  for (int i = 0; i < rows_; ++i) {
    if (F_->is_zero(v[i])) continue;
    for (int j = 0; j < cols_; ++j) r[j] = F_->add(r[j], F_->mul(v[i], at(i, j)));
  }
  return r;
}

Mat Mat::vstack(const Mat& below) const {
  if (cols_ != below.cols_) fail(errc::wrong_count, "vstack column mismatch");
  Mat r(F_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

Echelon rref(const Mat& A) {
  Echelon e;
  e.R = A;
  Mat& R = e.R;
  const FieldPtr& F = A.field();
  int r = 0;
  for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < A.rows(); ++i)
      if (!F->is_zero(R.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < A.cols(); ++j) std::swap(R.at(piv, j), R.at(r, j));
    Fq inv = F->inv(R.at(r, c));
    for (int j = c; j < A.cols(); ++j) R.at(r, j) = F->mul(R.at(r, j), inv);
    for (int i = 0; i < A.rows(); ++i) {
      if (i == r) continue;
      Fq f = R.at(i, c);
      if (F->is_zero(f)) continue;
      for (int j = c; j < A.cols(); ++j)
        R.at(i, j) = F->sub(R.at(i, j), F->mul(f, R.at(r, j)));
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

Mat null_space(const Mat& A) {
  Echelon e = rref(A);
  const FieldPtr& F = A.field();
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < A.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat K(F, (int)free_cols.size(), A.cols());
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    K.at((int)fi, fc) = F->one();
    for (int pr = 0; pr < e.rank; ++pr)
      K.at((int)fi, e.pivot_cols[pr]) = F->neg(e.R.at(pr, fc));
  }
  return K;
}

std::optional<std::vector<Fq>> solve(const Mat& A, const std::vector<Fq>& b) {
  if ((int)b.size() != A.rows()) fail(errc::wrong_count, "rhs length mismatch in solve");
  const FieldPtr& F = A.field();
  Mat aug(F, A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  Echelon e = rref(aug);
  std::vector<Fq> x(A.cols(), F->zero());
  for (int pr = 0; pr < e.rank; ++pr) {
    int c = e.pivot_cols[pr];
    if (c == A.cols()) return std::nullopt;  // pivot in the rhs column: inconsistent
    x[c] = e.R.at(pr, A.cols());
  }
  return x;
}

int rank_of(const Mat& A) { return rref(A).rank; }

Fq det(const Mat& A) {
  if (A.rows() != A.cols()) fail(errc::wrong_count, "det of non-square matrix");
  const FieldPtr& F = A.field();
  Mat R = A;
  Fq d = F->one();
  int n = A.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!F->is_zero(R.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) return F->zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(R.at(piv, j), R.at(c, j));
      d = F->neg(d);
    }
    d = F->mul(d, R.at(c, c));
    Fq inv = F->inv(R.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      Fq f = F->mul(R.at(i, c), inv);
      if (F->is_zero(f)) continue;
      for (int j = c; j < n; ++j) R.at(i, j) = F->sub(R.at(i, j), F->mul(f, R.at(c, j)));
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) fail(errc::wrong_count, "inverse of non-square matrix");
  Mat aug(F_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = F_->one();
  }
  Echelon e = rref(aug);
  for (int i = 0; i < rows_; ++i)
    if (i >= (int)e.pivot_cols.size() || e.pivot_cols[i] != i)
      fail(errc::singular_generator, "matrix is singular");
  Mat r(F_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = e.R.at(i, cols_ + j);
  return r;
}

Mat row_space(const Mat& A) {
  Echelon e = rref(A);
  Mat r(A.field(), e.rank, A.cols());
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < A.cols(); ++j) r.at(i, j) = e.R.at(i, j);
  return r;
}

std::vector<Fq> reduce_against(const Echelon& E, std::vector<Fq> v) {
  const FieldPtr& F = E.R.field();
  for (int pr = 0; pr < E.rank; ++pr) {
    int c = E.pivot_cols[pr];
    Fq f = v[c];
    if (F->is_zero(f)) continue;
    for (int j = 0; j < E.R.cols(); ++j) v[j] = F->sub(v[j], F->mul(f, E.R.at(pr, j)));
  }
  return v;
}

bool in_row_space(const Echelon& E, const std::vector<Fq>& v) {
  const FieldPtr& F = E.R.field();
  std::vector<Fq> r = reduce_against(E, v);
  for (const Fq& x : r)
    if (!F->is_zero(x)) return false;
  return true;
}

}  // namespace modinv
