#include "modinv/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace modinv {

namespace {

struct MatLess {
  bool operator()(const Mat& a, const Mat& b) const { return a.lex_less(b); }
};

bool order_is_p_power(uint64_t order, uint32_t p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

}  // namespace

bool PGroup::contains(const Mat& m) const {
  return std::binary_search(elements.begin(), elements.end(), m, MatLess{});
}

PGroup group_enumerate(const std::vector<Mat>& gens, uint64_t cap) {
  if (gens.empty()) fail(errc::wrong_count, "group_enumerate needs at least one generator matrix");
  FieldPtr F = gens[0].field();
  int n = gens[0].rows();
  for (const Mat& g : gens) {
    if (g.rows() != n || g.cols() != n || !F->same(*g.field()))
      fail(errc::ring_mismatch, "generators have mismatched shapes or fields");
    if (F->is_zero(det(g))) fail(errc::singular_generator, "generator matrix is singular");
  }
  std::set<Mat, MatLess> seen;
  std::deque<Mat> queue;
  Mat id = Mat::identity(F, n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Mat cur = queue.front();
    queue.pop_front();
    for (const Mat& g : gens) {
      Mat next = cur.mul(g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) fail(errc::cap_exceeded, "group enumeration exceeded cap");
        queue.push_back(next);
      }
    }
  }
  PGroup G;
  G.F = F;
  G.dim = n;
  G.gens = gens;
  G.elements.assign(seen.begin(), seen.end());
  G.order = G.elements.size();
  if (!order_is_p_power(G.order, F->p()))
    fail(errc::not_p_group, "group order " + std::to_string(G.order) + " is not a power of p");
  return G;
}

PGroup group_from_elements(FieldPtr F, int dim, std::vector<Mat> gens, std::vector<Mat> elements) {
  std::sort(elements.begin(), elements.end(), MatLess{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PGroup G;
  G.F = std::move(F);
  G.dim = dim;
  G.gens = std::move(gens);
  G.elements = std::move(elements);
  G.order = G.elements.size();
  if (!order_is_p_power(G.order, G.F->p()))
    fail(errc::not_p_group, "subgroup order is not a power of p");
  return G;
}

bool is_pseudo_reflection(const Mat& g) {
  Mat d = g.sub(Mat::identity(g.field(), g.rows()));
  return rank_of(d) == 1;
}

bool is_transvection(const Mat& g) {
  Mat d = g.sub(Mat::identity(g.field(), g.rows()));
  if (rank_of(d) != 1) return false;
  return d.mul(d).is_zero();
}

std::vector<Mat> transvections_in(const PGroup& G) {
  std::vector<Mat> out;
  for (const Mat& g : G.elements)
    if (is_transvection(g)) out.push_back(g);
  return out;
}

bool generated_by_transvections(const PGroup& G) {
  std::vector<Mat> tvs = transvections_in(G);
  if (tvs.empty()) return G.order == 1;
  PGroup sub = group_enumerate(tvs, G.order + 1);
  return sub.order == G.order;
}

Mat fixed_space(const PGroup& G) {
  // x fixed by all gens  <=>  x (M_g - I) = 0  <=>  (M_g - I)^T x^T = 0
  Mat id = Mat::identity(G.F, G.dim);
  Mat stacked(G.F, 0, G.dim);
  bool first = true;
  for (const Mat& g : G.gens) {
    Mat block = g.sub(id).transpose();
    stacked = first ? block : stacked.vstack(block);
    first = false;
  }
  if (first) return Mat::identity(G.F, G.dim);  // no generators: everything fixed
  return row_space(null_space(stacked));
}

FlagBasis triangulating_flag(const FieldPtr& F, int n, const std::vector<Mat>& gens) {
  Mat id = Mat::identity(F, n);
  std::vector<std::vector<Fq>> flag_rows;
  Mat span(F, 0, n);  // rref of current flag span
  while ((int)flag_rows.size() < n) {
    Echelon cur = rref(span);
    // x admissible iff x (M_g - I) reduces to zero against the current span
    Mat stacked(F, 0, n);
    bool first = true;
    for (const Mat& g : gens) {
      Mat d = g.sub(id);
      Mat cond(F, n, n);
      // row i of d is the image of e_i under (g-1); reduce each against the span
      for (int i = 0; i < n; ++i) {
        std::vector<Fq> res = reduce_against(cur, d.row(i));
        cond.set_row(i, res);
      }
      Mat block = cond.transpose();  // condition x * cond = 0
      stacked = first ? block : stacked.vstack(block);
      first = false;
    }
    Mat K = first ? Mat::identity(F, n) : row_space(null_space(stacked));
    // append kernel vectors not already in the span, in canonical order
    bool grew = false;
    for (int i = 0; i < K.rows(); ++i) {
      Echelon e = rref(span);
      std::vector<Fq> v = K.row(i);
      if (in_row_space(e, v)) continue;
      flag_rows.push_back(v);
      span = span.vstack(Mat::from_rows(F, {v}));
      span = row_space(span);
      grew = true;
    }
    if (!grew) fail(errc::not_p_group, "no common fixed vector: group is not unipotent");
  }
  FlagBasis fb;
  fb.vectors = Mat::from_rows(F, flag_rows);
  fb.change_of_basis = fb.vectors.inverse();
  return fb;
}

FlagBasis triangulating_basis(const PGroup& G) {
  return triangulating_flag(G.F, G.dim, G.gens);
}

PGroup pointwise_stabilizer(const PGroup& G, const Mat& W) {
  Echelon e = rref(W);
  Mat id = Mat::identity(G.F, G.dim);
  std::vector<Mat> kept;
  for (const Mat& g : G.elements) {
    Mat d = g.sub(id);
    bool ok = true;
    for (int i = 0; ok && i < G.dim; ++i)
      if (!in_row_space(e, d.row(i))) ok = false;
    if (ok) kept.push_back(g);
  }
  std::vector<Mat> gens;
  for (const Mat& m : kept)
    if (!m.is_identity()) gens.push_back(m);
  return group_from_elements(G.F, G.dim, gens, kept);
}

Mat dual_matrix(const Mat& m) {
  int n = m.rows();
  Mat it = m.inverse().transpose();
  Mat r(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = it.at(n - 1 - i, n - 1 - j);
  return r;
}

PGroup dual_group(const PGroup& G) {
  std::vector<Mat> gens;
  gens.reserve(G.gens.size());
  for (const Mat& g : G.gens) gens.push_back(dual_matrix(g));
  std::vector<Mat> elems;
  elems.reserve(G.elements.size());
  for (const Mat& g : G.elements) elems.push_back(dual_matrix(g));
  return group_from_elements(G.F, G.dim, gens, elems);
}

QuotientSplit quotient_action_kernel(const PGroup& G, const std::vector<Fq>& v) {
  FieldPtr F = G.F;
  int n = G.dim;
  bool nonzero = false;
  for (const Fq& x : v)
    if (!F->is_zero(x)) nonzero = true;
  if (!nonzero) fail(errc::not_fixed_vector, "zero vector cannot define a quotient");
  for (const Mat& g : G.gens) {
    std::vector<Fq> img = g.apply_row(v);
    if (img != v) fail(errc::not_fixed_vector, "vector is not fixed by the group");
  }
  int piv = 0;
  while (F->is_zero(v[piv])) ++piv;
  Fq piv_inv = F->inv(v[piv]);

  QuotientSplit out;
  out.dropped_coord = piv;
  out.H = pointwise_stabilizer(G, Mat::from_rows(F, {v}));

  auto induced = [&](const Mat& g) {
    // image of e_i (i != piv) under g, with the v-component removed
    Mat q(F, n - 1, n - 1);
    int qi = 0;
    for (int i = 0; i < n; ++i) {
      if (i == piv) continue;
      std::vector<Fq> img = g.row(i);
      Fq c = F->mul(img[piv], piv_inv);
      for (int j = 0; j < n; ++j) img[j] = F->sub(img[j], F->mul(c, v[j]));
      int qj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == piv) continue;
        q.at(qi, qj++) = img[j];
      }
      ++qi;
    }
    return q;
  };
  std::vector<Mat> qelems;
  qelems.reserve(G.elements.size());
  for (const Mat& g : G.elements) qelems.push_back(induced(g));
  std::vector<Mat> qgens;
  for (const Mat& g : G.gens) {
    Mat q = induced(g);
    if (!q.is_identity()) qgens.push_back(q);
  }
  out.Gbar = group_from_elements(F, n - 1, qgens, qelems);
  if (out.H.order * out.Gbar.order != G.order)
    fail(errc::not_p_group, "quotient split order mismatch");
  return out;
}

std::vector<Mat> commutator_generators(const PGroup& G) {
  std::set<Mat, MatLess> comms;
  for (const Mat& a : G.elements) {
    Mat ai = a.inverse();
    for (const Mat& b : G.elements) {
      Mat c = a.mul(b).mul(ai).mul(b.inverse());
      comms.insert(c);
    }
  }
  return std::vector<Mat>(comms.begin(), comms.end());
}

bool is_abelian(const PGroup& G) {
  for (size_t i = 0; i < G.gens.size(); ++i)
    for (size_t j = i + 1; j < G.gens.size(); ++j)
      if (G.gens[i].mul(G.gens[j]) != G.gens[j].mul(G.gens[i])) return false;
  return true;
}

bool is_elementary_abelian(const PGroup& G) {
  if (!is_abelian(G)) return false;
  uint32_t p = G.p();
  for (const Mat& g : G.elements) {
    Mat gp = Mat::identity(G.F, G.dim);
    for (uint32_t i = 0; i < p; ++i) gp = gp.mul(g);
    if (!gp.is_identity()) return false;
  }
  return true;
}

PGroup conjugated_group(const PGroup& G, const Mat& C) {
  Mat Ci = C.inverse();
  auto conj = [&](const Mat& m) { return C.mul(m).mul(Ci); };
  std::vector<Mat> gens, elems;
  gens.reserve(G.gens.size());
  elems.reserve(G.elements.size());
  for (const Mat& g : G.gens) gens.push_back(conj(g));
  for (const Mat& g : G.elements) elems.push_back(conj(g));
  return group_from_elements(G.F, G.dim, gens, elems);
}

}  // namespace modinv
