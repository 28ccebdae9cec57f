#include <doctest.h>

#include "modinv/errors.hpp"
#include "modinv/linalg.hpp"

using namespace modinv;

namespace {

Mat mat(const FieldPtr& F, const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Fq>> r;
  for (const auto& row : rows) {
    std::vector<Fq> x;
    for (int v : row) x.push_back(F->from_int(v));
    r.push_back(x);
  }
  return Mat::from_rows(F, r);
}

}  // namespace

TEST_CASE("rref and rank over a prime field") {
  auto F = FieldCtx::make(5);
  Mat m = mat(F, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  Echelon e = rref(m);
  CHECK(e.rank == 2);
  CHECK(e.pivot_cols == std::vector<int>{0, 1});
  // reduced form: leading ones, zeros above pivots
  CHECK(e.R.at(0, 0) == F->one());
  CHECK(e.R.at(1, 1) == F->one());
  CHECK(F->is_zero(e.R.at(0, 1)));
}

TEST_CASE("null space vectors annihilate the matrix") {
  auto F = FieldCtx::make(3);
  Mat m = mat(F, {{1, 2, 0, 1}, {0, 1, 1, 2}});
  Mat ns = null_space(m);  // rows x with m x^T = 0
  CHECK(ns.rows() == 2);
  for (int i = 0; i < ns.rows(); ++i) {
    std::vector<Fq> img = m.transpose().apply_row(ns.row(i));
    for (const Fq& c : img) CHECK(F->is_zero(c));
  }
  CHECK(rank_of(m) + ns.rows() == 4);
}

TEST_CASE("solve returns an exact solution when one exists") {
  auto F = FieldCtx::make(2, {1, 1, 1});
  Fq t = F->parse("t");
  Mat A = Mat::from_rows(F, {{F->one(), t}, {t, F->one()}});
  std::vector<Fq> x0 = {t, F->add(F->one(), t)};
  std::vector<Fq> b = A.transpose().apply_row(x0);  // A x0^T
  auto x = solve(A, b);
  REQUIRE(x.has_value());
  CHECK(A.transpose().apply_row(*x) == b);
  // inconsistent system
  Mat Z = Mat::from_rows(F, {{F->one(), F->zero()}, {F->one(), F->zero()}});
  auto none = solve(Z, {F->zero(), F->one()});
  CHECK(!none.has_value());
}

TEST_CASE("determinant, inverse, and products") {
  auto F = FieldCtx::make(7);
  Mat m = mat(F, {{2, 1, 0}, {1, 3, 1}, {0, 1, 1}});
  Fq d = det(m);
  CHECK(!F->is_zero(d));
  Mat inv = m.inverse();
  CHECK(m.mul(inv).is_identity());
  CHECK(inv.mul(m).is_identity());
  Mat s = mat(F, {{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(F->is_zero(det(s)));
  CHECK_THROWS_AS((void)s.inverse(), error);
}

TEST_CASE("row space membership and reduction") {
  auto F = FieldCtx::make(2);
  Mat m = mat(F, {{1, 0, 1}, {0, 1, 1}});
  CHECK(row_space(m).rows() == 2);
  Echelon e = rref(m);
  CHECK(in_row_space(e, {F->one(), F->one(), F->zero()}));  // sum of the rows
  CHECK(!in_row_space(e, {F->one(), F->zero(), F->zero()}));
  std::vector<Fq> red = reduce_against(e, {F->one(), F->one(), F->zero()});
  for (const Fq& c : red) CHECK(F->is_zero(c));
}

TEST_CASE("vstack and transpose") {
  auto F = FieldCtx::make(3);
  Mat a = mat(F, {{1, 2}});
  Mat b = mat(F, {{0, 1}});
  Mat v = a.vstack(b);
  CHECK(v.rows() == 2);
  CHECK(v.at(1, 1) == F->one());
  Mat t = v.transpose();
  CHECK(t.rows() == 2);
  CHECK(t.at(1, 0) == F->from_int(2));
}
