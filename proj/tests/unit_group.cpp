#include <doctest.h>

#include <algorithm>

#include "modinv/errors.hpp"
#include "modinv/group.hpp"

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

// The three commuting transvections on GF(4)^4 used throughout: basis order
// (v, w3, w2, w1); sigma moves v by w2, tau1 moves v and w3 by w1, tau2 moves
// w3 by t*w1.
struct SampleGroup {
  FieldPtr F;
  Mat sigma, tau1, tau2;
  PGroup T;
};

SampleGroup sample_p2() {
  SampleGroup s;
  s.F = FieldCtx::make(2, {1, 1, 1});
  Fq o = s.F->one(), z = s.F->zero(), t = s.F->parse("t");
  s.sigma = Mat::from_rows(s.F, {{o, z, o, z}, {z, o, z, z}, {z, z, o, z}, {z, z, z, o}});
  s.tau1 = Mat::from_rows(s.F, {{o, z, z, o}, {z, o, z, o}, {z, z, o, z}, {z, z, z, o}});
  s.tau2 = Mat::from_rows(s.F, {{o, z, z, z}, {z, o, z, t}, {z, z, o, z}, {z, z, z, o}});
  s.T = group_enumerate({s.sigma, s.tau1, s.tau2});
  return s;
}

}  // namespace

TEST_CASE("enumeration of the three-transvection group over GF(4)") {
  SampleGroup s = sample_p2();
  CHECK(s.T.order == 8);
  CHECK(is_abelian(s.T));
  CHECK(is_elementary_abelian(s.T));
  // exactly 4 of the 7 nontrivial elements are transvections
  CHECK(transvections_in(s.T).size() == 4);
  CHECK(generated_by_transvections(s.T));
  // the subgroup generated by sigma and tau2 has order 4
  CHECK(group_enumerate({s.sigma, s.tau2}).order == 4);
  CHECK(s.T.contains(s.sigma.mul(s.tau1)));
}

TEST_CASE("transvection and pseudo-reflection predicates") {
  SampleGroup s = sample_p2();
  CHECK(is_transvection(s.sigma));
  CHECK(is_pseudo_reflection(s.sigma));
  CHECK(!is_transvection(Mat::identity(s.F, 4)));
  CHECK(!is_pseudo_reflection(Mat::identity(s.F, 4)));
  // diag(1,1,1,t): rank(g-1)=1 but (g-1)^2 != 0
  Fq o = s.F->one(), z = s.F->zero(), t = s.F->parse("t");
  Mat d = Mat::from_rows(s.F, {{o, z, z, z}, {z, o, z, z}, {z, z, o, z}, {z, z, z, t}});
  CHECK(is_pseudo_reflection(d));
  CHECK(!is_transvection(d));
}

TEST_CASE("fixed spaces match the hand computations") {
  SampleGroup s = sample_p2();
  Mat fixT = fixed_space(s.T);
  REQUIRE(fixT.rows() == 2);
  // span{w2, w1}: coordinates 2 and 3
  CHECK(fixT.row(0) == std::vector<Fq>{s.F->zero(), s.F->zero(), s.F->one(), s.F->zero()});
  CHECK(fixT.row(1) == std::vector<Fq>{s.F->zero(), s.F->zero(), s.F->zero(), s.F->one()});
  // sigma alone fixes span{w3, w2, w1}
  CHECK(fixed_space(group_enumerate({s.sigma})).rows() == 3);
  // tau1 alone fixes span{v+w3, w2, w1}; the flag starts inside it
  PGroup T1 = group_enumerate({s.tau1});
  FlagBasis fb = triangulating_basis(T1);
  auto first = fb.vectors.row(0);
  CHECK(first[0] == first[1]);  // multiples of v+w3 (or w2/w1: coords 0=1)
}

TEST_CASE("triangulating flag is lower unitriangular on every element") {
  SampleGroup s = sample_p2();
  FlagBasis fb = triangulating_basis(s.T);
  // frozen flag for this group: (w2, w1, v, w3)
  CHECK(fb.vectors.row(0)[2] == s.F->one());
  CHECK(fb.vectors.row(1)[3] == s.F->one());
  CHECK(fb.vectors.row(2)[0] == s.F->one());
  CHECK(fb.vectors.row(3)[1] == s.F->one());
  for (const Mat& g : s.T.elements) {
    Mat m = fb.to_flag_coords(g);
    for (int i = 0; i < 4; ++i) {
      CHECK(m.at(i, i) == s.F->one());
      for (int j = i + 1; j < 4; ++j) CHECK(s.F->is_zero(m.at(i, j)));
    }
  }
  // trivial group: the standard basis
  PGroup triv = group_enumerate({Mat::identity(s.F, 4)});
  CHECK(triangulating_basis(triv).vectors.is_identity());
}

TEST_CASE("pointwise stabilizers") {
  SampleGroup s = sample_p2();
  Fq o = s.F->one(), z = s.F->zero();
  Mat W = Mat::from_rows(s.F, {{z, z, o, z}, {z, z, z, o}});  // span{w2, w1}
  CHECK(pointwise_stabilizer(s.T, W).order == 8);  // the whole group
  CHECK(pointwise_stabilizer(s.T, Mat::identity(s.F, 4)).order == 8);
  Mat empty(s.F, 0, 4);
  CHECK(pointwise_stabilizer(s.T, empty).order == 1);
  // Lagrange: the order divides |G|
  Mat W1 = Mat::from_rows(s.F, {{z, z, z, o}});  // span{w1}
  PGroup GU = pointwise_stabilizer(s.T, W1);
  CHECK(s.T.order % GU.order == 0);
  CHECK(GU.order == 4);  // tau1, tau2 and their product
}

TEST_CASE("dual action matches the hand-computed matrices") {
  SampleGroup s = sample_p2();
  Fq o = s.F->one(), z = s.F->zero(), t = s.F->parse("t");
  // dual matrices in the dual basis, same positions: the single moved
  // covector picks up the transposed entries
  Mat dsigma = Mat::from_rows(s.F, {{o, z, z, z}, {z, o, z, o}, {z, z, o, z}, {z, z, z, o}});
  Mat dtau1 = Mat::from_rows(s.F, {{o, z, o, o}, {z, o, z, z}, {z, z, o, z}, {z, z, z, o}});
  Mat dtau2 = Mat::from_rows(s.F, {{o, z, t, z}, {z, o, z, z}, {z, z, o, z}, {z, z, z, o}});
  CHECK(dual_matrix(s.sigma) == dsigma);
  CHECK(dual_matrix(s.tau1) == dtau1);
  CHECK(dual_matrix(s.tau2) == dtau2);
  // involution and preserved invariants
  CHECK(dual_matrix(dual_matrix(s.tau1)) == s.tau1);
  PGroup D = dual_group(s.T);
  CHECK(D.order == s.T.order);
  CHECK(transvections_in(D).size() == transvections_in(s.T).size());
  PGroup DD = dual_group(D);
  for (const Mat& g : s.T.elements) CHECK(DD.contains(g));
}

TEST_CASE("quotient by the line through a fixed vector") {
  SampleGroup s = sample_p2();
  std::vector<Fq> w1 = {s.F->zero(), s.F->zero(), s.F->zero(), s.F->one()};
  QuotientSplit qs = quotient_action_kernel(s.T, w1);
  CHECK(qs.H.order == 4);
  CHECK(qs.Gbar.order == 2);
  CHECK(qs.H.order * qs.Gbar.order == s.T.order);
  CHECK(qs.Gbar.dim == 3);
  CHECK(qs.H.contains(s.tau1));
  CHECK(qs.H.contains(s.tau2));
  CHECK(!qs.H.contains(s.sigma));
  // a non-fixed vector is rejected
  std::vector<Fq> v = {s.F->one(), s.F->zero(), s.F->zero(), s.F->zero()};
  CHECK_THROWS_AS((void)quotient_action_kernel(s.T, v), error);
}

TEST_CASE("commutators") {
  SampleGroup s = sample_p2();
  for (const Mat& c : commutator_generators(s.T)) CHECK(c.is_identity());
  // the unitriangular group U_4(F_2): commutators vanish on the first
  // superdiagonal
  auto F2 = FieldCtx::make(2);
  Mat a = mat(F2, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  Mat b = mat(F2, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  Mat c = mat(F2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  PGroup U = group_enumerate({a, b, c});
  CHECK(U.order == 64);
  CHECK(!is_abelian(U));
  for (const Mat& g : commutator_generators(U)) {
    CHECK(F2->is_zero(g.at(0, 1)));
    CHECK(F2->is_zero(g.at(1, 2)));
    CHECK(F2->is_zero(g.at(2, 3)));
  }
}

TEST_CASE("Jordan blocks: transvection census depends on p") {
  auto F3 = FieldCtx::make(3);
  Mat j3 = mat(F3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  PGroup G3 = group_enumerate({j3});
  CHECK(G3.order == 3);
  CHECK(transvections_in(G3).empty());
  CHECK(!generated_by_transvections(G3));

  auto F2 = FieldCtx::make(2);
  Mat j2 = mat(F2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  PGroup G2 = group_enumerate({j2});
  CHECK(G2.order == 4);
  CHECK(transvections_in(G2).size() == 1);  // the square of the block
  CHECK(is_transvection(j2.mul(j2)));
  CHECK(!generated_by_transvections(G2));
}

TEST_CASE("conjugation moves the whole group coherently") {
  SampleGroup s = sample_p2();
  FlagBasis fb = triangulating_basis(s.T);
  PGroup Tf = conjugated_group(s.T, fb.vectors);
  CHECK(Tf.order == s.T.order);
  for (const Mat& g : s.T.gens) CHECK(Tf.contains(fb.to_flag_coords(g)));
}

TEST_CASE("invalid inputs are rejected") {
  auto F3 = FieldCtx::make(3);
  Mat swap = mat(F3, {{0, 1}, {1, 0}});  // order 2, not a 3-group
  CHECK_THROWS_AS((void)group_enumerate({swap}), error);
  auto F2 = FieldCtx::make(2);
  Mat sing = mat(F2, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS((void)group_enumerate({sing}), error);
  SampleGroup s = sample_p2();
  CHECK_THROWS_AS((void)group_enumerate({s.sigma, s.tau1, s.tau2}, 4), error);  // cap
}

TEST_CASE("group_from_elements rebuilds subgroups") {
  SampleGroup s = sample_p2();
  PGroup sub = group_enumerate({s.sigma});
  PGroup re = group_from_elements(s.F, 4, sub.gens, sub.elements);
  CHECK(re.order == 2);
  CHECK(re.contains(s.sigma));
}
