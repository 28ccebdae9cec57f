#include "modinv/oracle.hpp"

#include <algorithm>

namespace modinv {

const char* kemper_reason_name(KemperReason r) {
  switch (r) {
    case KemperReason::none: return "None";
    case KemperReason::wrong_count: return "WrongCount";
    case KemperReason::not_homogeneous: return "NotHomogeneous";
    case KemperReason::not_invariant: return "NotInvariant";
    case KemperReason::degree_product: return "DegreeProduct";
    case KemperReason::not_sop: return "NotSop";
  }
  return "Unknown";
}

std::vector<Poly> invariant_space_basis(const PGroup& G, uint32_t d) {
  FieldPtr F = G.F;
  int n = G.dim;
  std::vector<Monomial> basis = graded_piece(n, d);
  int M = (int)basis.size();
  std::vector<const Mat*> gens;
  for (const Mat& g : G.gens)
    if (!g.is_identity()) gens.push_back(&g);
  if (gens.empty()) {
    std::vector<Poly> out;
    for (const Monomial& m : basis) {
      Poly f(F, n);
      f.add_term(m, F->one());
      out.push_back(f);
    }
    return out;
  }
  Mat A(F, (int)gens.size() * M, M);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    MatrixAction act(*gens[gi], n);
    for (int j = 0; j < M; ++j) {
      Poly img = act.apply_monomial(basis[j]);
      Monomial mj = basis[j];
      img.add_term(mj, F->neg(F->one()));  // delta = image - monomial
      for (const auto& [m, c] : img.terms()) {
        // locate m in the graded basis (descending graded-lex, binary search)
        auto it = std::lower_bound(basis.begin(), basis.end(), m,
                                   [](const Monomial& a, const Monomial& b) {
                                     return GradedLexGreater{}(a, b);
                                   });
        int row = (int)(it - basis.begin());
        A.at((int)gi * M + row, j) = c;
      }
    }
  }
  Mat K = null_space(A);
  std::vector<Poly> out;
  out.reserve(K.rows());
  for (int i = 0; i < K.rows(); ++i)
    out.push_back(poly_from_coeffs(F, n, basis, K.row(i)));
  return out;
}

uint32_t invariant_space_dim(const PGroup& G, uint32_t d) {
  return (uint32_t)invariant_space_basis(G, d).size();
}

bool is_invariant(const Poly& f, const PGroup& G, bool exhaustive) {
  const std::vector<Mat>& ms = exhaustive ? G.elements : G.gens;
  for (const Mat& g : ms)
    if (!f.delta(g).is_zero()) return false;
  return true;
}

SopResult sop_check(const std::vector<Poly>& fs) {
  if (fs.empty()) fail(errc::wrong_count, "sop_check needs at least one polynomial");
  int n = fs[0].nvars();
  FieldPtr F = fs[0].field();
  if ((int)fs.size() != n)
    fail(errc::wrong_count, "sop_check needs exactly ring_dim polynomials");
  std::vector<uint32_t> degs;
  uint64_t D = 1;
  for (const Poly& f : fs) {
    auto hd = f.homogeneous_degree();
    if (!hd || *hd == 0) fail(errc::not_homogeneous, "sop_check needs homogeneous polynomials of positive degree");
    degs.push_back(*hd);
    D += *hd - 1;
  }
  for (uint32_t d = 1; d <= D; ++d) {
    std::vector<Monomial> basis = graded_piece(n, d);
    size_t need = basis.size();
    // quick lower bound: not enough product rows to possibly span
    size_t rows = 0;
    for (uint32_t dg : degs)
      if (dg <= d) rows += graded_piece(n, d - dg).size();
    if (rows < need) continue;
    Mat A(F, (int)rows, (int)need);
    int r = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
      if (degs[i] > d) continue;
      for (const Monomial& m : graded_piece(n, d - degs[i])) {
        Poly prod = fs[i];
        for (int v = 0; v < n; ++v)
          if (m.e[v]) prod = prod.mul_variable_power(v, m.e[v]);
        std::vector<Fq> cv = coeff_vector(prod, basis);
        A.set_row(r++, cv);
      }
    }
    if (rank_of(A) == (int)need) return SopResult{true, d};
  }
  return SopResult{false, std::nullopt};
}

KemperResult kemper_criterion(const PGroup& G, const std::vector<Poly>& fs) {
  KemperResult res;
  int n = G.dim;
  if ((int)fs.size() != n) {
    res.reason = KemperReason::wrong_count;
    return res;
  }
  uint64_t prod = 1;
  for (const Poly& f : fs) {
    auto hd = f.homogeneous_degree();
    if (!hd || *hd == 0) {
      res.reason = KemperReason::not_homogeneous;
      return res;
    }
    prod *= *hd;
    if (prod > (uint64_t)1 << 40) prod = (uint64_t)1 << 40;  // saturate; can no longer equal |G|
  }
  res.degree_product = prod;
  for (const Poly& f : fs) {
    if (f.nvars() != n || !f.field()->same(*G.F))
      fail(errc::ring_mismatch, "candidate generators live in the wrong ring");
    if (!is_invariant(f, G)) {
      res.reason = KemperReason::not_invariant;
      return res;
    }
  }
  if (prod != G.order) {
    res.reason = KemperReason::degree_product;
    return res;
  }
  Poly jac = jacobian_det(fs);
  res.jacobian = jac.is_zero() ? Tri::zero : Tri::nonzero;
  SopResult sop = sop_check(fs);
  res.sop_witness = sop.witness_degree;
  if (!sop.is_sop) {
    if (res.jacobian == Tri::nonzero)
      fail(errc::verification_failed, "jacobian criterion and s.o.p. check disagree");
    res.reason = KemperReason::not_sop;
    return res;
  }
  res.polynomial = true;
  res.reason = KemperReason::none;
  return res;
}

GradedReport minimal_generator_report(const PGroup& G, uint32_t D) {
  GradedReport rep;
  FieldPtr F = G.F;
  int n = G.dim;
  std::vector<std::vector<Poly>> bases(D + 1);
  rep.degrees.push_back(0);
  rep.dims.push_back(1);
  rep.mingen_counts.push_back(0);
  for (uint32_t d = 1; d <= D; ++d) {
    bases[d] = invariant_space_basis(G, d);
    std::vector<Monomial> basis = graded_piece(n, d);
    // span of products of strictly lower-degree invariants
    std::vector<std::vector<Fq>> rows;
    for (uint32_t e = 1; 2 * e <= d; ++e) {
      for (const Poly& a : bases[e])
        for (const Poly& b : bases[d - e]) rows.push_back(coeff_vector(a.mul(b), basis));
    }
    uint32_t decomposable = 0;
    if (!rows.empty()) decomposable = (uint32_t)rank_of(Mat::from_rows(F, rows));
    rep.degrees.push_back(d);
    rep.dims.push_back((uint32_t)bases[d].size());
    rep.mingen_counts.push_back((uint32_t)bases[d].size() - decomposable);
  }
  return rep;
}

Poly lift_invariant(const PGroup& G, const Poly& target, int v_index, uint32_t d) {
  FieldPtr F = G.F;
  int n = G.dim;
  if (target.nvars() != n - 1)
    fail(errc::ring_mismatch, "lift target must live in the quotient ring");
  if (!target.is_zero()) {
    auto hd = target.homogeneous_degree();
    if (!hd || *hd != d) fail(errc::not_homogeneous, "lift target degree mismatch");
  }
  std::vector<Poly> B = invariant_space_basis(G, d);
  std::vector<Monomial> qbasis = graded_piece(n - 1, d);
  Mat A(F, (int)qbasis.size(), (int)B.size());
  for (size_t j = 0; j < B.size(); ++j) {
    std::vector<Fq> cv = coeff_vector(B[j].quotient_mod_variable(v_index), qbasis);
    for (size_t i = 0; i < qbasis.size(); ++i) A.at((int)i, (int)j) = cv[i];
  }
  auto x = solve(A, coeff_vector(target, qbasis));
  if (!x) fail(errc::lift_failed, "no invariant preimage at degree " + std::to_string(d));
  Poly f = Poly::zero(F, n);
  for (size_t j = 0; j < B.size(); ++j)
    if (!F->is_zero((*x)[j])) f = f.add(B[j].scale((*x)[j]));
  return f;
}

std::vector<uint64_t> hilbert_series_coeffs(const std::vector<uint32_t>& degs, uint32_t D) {
  std::vector<uint64_t> h(D + 1, 0);
  h[0] = 1;
  for (uint32_t dg : degs) {
    if (dg == 0) fail(errc::not_homogeneous, "zero degree in Hilbert series");
    for (uint32_t j = dg; j <= D; ++j) h[j] += h[j - dg];
  }
  return h;
}

bool hilbert_check(const PGroup& G, const std::vector<uint32_t>& degrees, uint32_t D,
                   uint32_t* first_mismatch) {
  std::vector<uint64_t> h = hilbert_series_coeffs(degrees, D);
  for (uint32_t d = 0; d <= D; ++d) {
    if (h[d] != invariant_space_dim(G, d)) {
      if (first_mismatch) *first_mismatch = d;
      return false;
    }
  }
  return true;
}

SubringBasis::SubringBasis(std::vector<Poly> gens) : gens_(std::move(gens)) {
  for (const Poly& g : gens_) {
    auto hd = g.homogeneous_degree();
    if (!hd || *hd == 0)
      fail(errc::not_homogeneous, "subring generators must be homogeneous of positive degree");
    degs_.push_back(*hd);
  }
}

const Poly& SubringBasis::gen_power(size_t i, uint32_t e) {
  auto key = std::make_pair(i, e);
  auto it = pow_cache_.find(key);
  if (it != pow_cache_.end()) return it->second;
  Poly p = gens_[i].pow(e);
  return pow_cache_.emplace(key, std::move(p)).first->second;
}

std::optional<Poly> SubringBasis::express_homogeneous(const Poly& f, uint32_t d) {
  FieldPtr F = f.field();
  int n = f.nvars();
  int s = (int)gens_.size();
  // exponent tuples with sum a_i * deg_i = d, lexicographically descending
  std::vector<std::vector<uint32_t>> tuples;
  std::vector<uint32_t> cur(s, 0);
  auto rec = [&](auto&& self, int i, uint32_t rem) -> void {
    if (i == s) {
      if (rem == 0) tuples.push_back(cur);
      return;
    }
    uint32_t top = rem / degs_[i];
    for (uint32_t a = top + 1; a-- > 0;) {
      cur[i] = a;
      self(self, i + 1, rem - a * degs_[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  if (tuples.empty()) return std::nullopt;
  std::vector<Monomial> basis = graded_piece(n, d);
  Mat A(F, (int)basis.size(), (int)tuples.size());
  for (size_t tj = 0; tj < tuples.size(); ++tj) {
    Poly prod = Poly::constant(F, n, F->one());
    for (int i = 0; i < s; ++i)
      if (tuples[tj][i]) prod = prod.mul(gen_power((size_t)i, tuples[tj][i]));
    std::vector<Fq> cv = coeff_vector(prod, basis);
    for (size_t bi = 0; bi < basis.size(); ++bi) A.at((int)bi, (int)tj) = cv[bi];
  }
  auto x = solve(A, coeff_vector(f, basis));
  if (!x) return std::nullopt;
  Poly rep(F, s);
  for (size_t tj = 0; tj < tuples.size(); ++tj) {
    Monomial m;
    m.e = tuples[tj];
    rep.add_term(m, (*x)[tj]);
  }
  return rep;
}

std::optional<Poly> SubringBasis::express(const Poly& f) {
  FieldPtr F = f.field();
  int s = (int)gens_.size();
  if (f.is_zero()) return Poly::zero(F, s);
  // split into graded components and express each
  std::map<uint32_t, Poly> comps;
  for (const auto& [m, c] : f.terms()) {
    uint32_t d = m.degree();
    auto it = comps.find(d);
    if (it == comps.end()) it = comps.emplace(d, Poly::zero(F, f.nvars())).first;
    it->second.add_term(m, c);
  }
  Poly out = Poly::zero(F, s);
  for (const auto& [d, comp] : comps) {
    if (d == 0) {
      Monomial one;
      one.e.assign(s, 0);
      out.add_term(one, comp.coeff(Monomial{std::vector<uint32_t>((size_t)f.nvars(), 0)}));
      continue;
    }
    auto rep = express_homogeneous(comp, d);
    if (!rep) return std::nullopt;
    out = out.add(*rep);
  }
  return out;
}

}  // namespace modinv
