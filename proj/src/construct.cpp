#include "modinv/construct.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "modinv/errors.hpp"
#include "modinv/linalg.hpp"

namespace modinv {

namespace {

std::vector<Mat> non_identity(const PGroup& G) {
  std::vector<Mat> out;
  for (const Mat& m : G.elements)
    if (!m.is_identity()) out.push_back(m);
  return out;
}

std::optional<uint32_t> p_power_exponent(uint64_t d, uint32_t p) {
  if (d == 0) return std::nullopt;
  uint32_t e = 0;
  uint64_t v = 1;
  while (v < d) {
    v *= p;
    ++e;
  }
  if (v != d) return std::nullopt;
  return e;
}

uint32_t u32_p_pow(uint32_t p, uint32_t e) {
  uint64_t v = 1;
  for (uint32_t i = 0; i < e; ++i) {
    v *= p;
    if (v > kDegreeCap) fail(errc::cap_exceeded, "power of p exceeds the degree cap");
  }
  return (uint32_t)v;
}

Monomial unit_monomial(int nvars, int var, uint32_t e) {
  Monomial m;
  m.e.assign((size_t)nvars, 0);
  m.e[(size_t)var] = e;
  return m;
}

// f must be zero or a scalar multiple of `mono`; the scalar otherwise absent.
std::optional<Fq> scalar_of(const Poly& f, const Monomial& mono) {
  if (f.is_zero()) return f.field()->zero();
  if (f.terms().size() != 1) return std::nullopt;
  const auto& [m, c] = *f.terms().begin();
  if (m != mono) return std::nullopt;
  return c;
}

int variable_index_of(const Poly& v) {
  if (v.terms().size() == 1) {
    const auto& [m, c] = *v.terms().begin();
    if (c == v.field()->one() && m.degree() == 1) {
      for (int i = 0; i < v.nvars(); ++i)
        if (m.e[(size_t)i] == 1) return i;
    }
  }
  fail(errc::hypothesis_violated, "expected a plain variable");
}

uint32_t mod_pow_u32(uint64_t b, uint32_t e, uint32_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return (uint32_t)r;
}

// Incremental F_p-span of field elements (coordinates over the prime field).
class FpSpan {
 public:
  explicit FpSpan(const FieldPtr& F) : p_(F->p()), k_(F->k()) {}

  // true (and grows the span) iff a is independent of the current span
  bool try_add(const Fq& a) {
    std::vector<uint32_t> v(a.c.begin(), a.c.begin() + k_);
    for (size_t b = 0; b < basis_.size(); ++b) {
      uint32_t c = v[pivots_[b]] % p_;
      if (c == 0) continue;
      for (uint32_t j = 0; j < k_; ++j) v[j] = (v[j] + (p_ - c) * basis_[b][j]) % p_;
    }
    uint32_t piv = k_;
    for (uint32_t j = 0; j < k_; ++j)
      if (v[j] % p_ != 0) {
        piv = j;
        break;
      }
    if (piv == k_) return false;
    uint32_t inv = mod_pow_u32(v[piv], p_ - 2, p_);
    for (uint32_t j = 0; j < k_; ++j) v[j] = v[j] * inv % p_;
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  uint32_t p_, k_;
  std::vector<std::vector<uint32_t>> basis_;
  std::vector<uint32_t> pivots_;
};

}  // namespace

Poly set_variable_zero(const Poly& f, int var) {
  Poly out(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.e[(size_t)var] == 0) out.add_term(m, c);
  return out;
}

bool is_monic_p_polynomial(const Poly& f, int var, uint32_t p) {
  if (f.is_zero()) return false;
  uint32_t top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m.e[(size_t)var]);
  if (top == 0 || !p_power_exponent(top, p)) return false;
  bool saw_top = false;
  for (const auto& [m, c] : f.terms()) {
    uint32_t e = m.e[(size_t)var];
    if (e == 0) continue;
    if (!p_power_exponent(e, p)) return false;
    if (e == top) {
      if (m.degree() != top || !(c == f.field()->one()) || saw_top) return false;
      saw_top = true;
    }
  }
  return saw_top;
}

std::optional<PurePowerResidue> pure_power_residue(const Poly& f, int v_index) {
  const FieldPtr& F = f.field();
  uint32_t p = F->p();
  Poly r = set_variable_zero(f, v_index);
  if (r.is_zero()) return std::nullopt;
  auto d = r.homogeneous_degree();
  if (!d) return std::nullopt;
  auto h = p_power_exponent(*d, p);
  if (!h) return std::nullopt;
  PurePowerResidue out;
  out.h = *h;
  out.u.assign((size_t)f.nvars(), F->zero());
  for (const auto& [m, c] : r.terms()) {
    int var = -1;
    for (int j = 0; j < f.nvars(); ++j)
      if (m.e[(size_t)j] != 0) {
        if (var >= 0) return std::nullopt;  // mixed monomial: not a pure power
        var = j;
      }
    if (var < 0 || m.e[(size_t)var] != *d) return std::nullopt;
    Fq u = c;
    for (uint32_t i = 0; i < *h; ++i) u = F->pth_root(u);
    out.u[(size_t)var] = u;
  }
  return out;
}

Poly nakajima_step(const Poly& x, const Mat& g) {
  if (!x.homogeneous_degree()) fail(errc::hypothesis_violated, "step input must be nonzero homogeneous");
  uint32_t p = x.field()->p();
  Poly d = x.delta(g);
  Poly xp = x.pow(p);
  if (d.is_zero()) return xp;
  return xp.sub(d.pow(p - 1).mul(x));
}

Poly nakajima_chain(const std::vector<Poly>& fixed_vars, const Poly& x, const std::vector<Mat>& gens) {
  const FieldPtr& F = x.field();
  uint32_t p = F->p();
  auto deg = x.homogeneous_degree();
  if (!deg || !p_power_exponent(*deg, p))
    fail(errc::hypothesis_violated, "chain input must be homogeneous of p-power degree");
  SubringBasis fixed(fixed_vars);
  Poly y = x;
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const Mat& g = gens[gi];
    for (const Poly& f : fixed_vars)
      if (!f.delta(g).is_zero())
        fail(errc::hypothesis_violated,
             "chain generator " + std::to_string(gi) + " moves a fixed element");
    Poly d = y.delta(g);
    if (d.is_zero()) continue;
    if (!fixed.contains(d))
      fail(errc::hypothesis_violated,
           "chain generator " + std::to_string(gi) + " has delta outside the fixed subring");
    y = y.pow(p).sub(d.pow(p - 1).mul(y));
  }
  for (size_t gi = 0; gi < gens.size(); ++gi)
    if (!y.delta(gens[gi]).is_zero())
      fail(errc::hypothesis_violated,
           "chain output still moved by generator " + std::to_string(gi));
  return y;
}

namespace {
struct DegEntry {
  Poly m;
  uint32_t e;  // degree = p^e
};
}  // namespace

std::vector<Poly> prop27_generators(const Poly& v, std::vector<Poly> ms, const std::vector<Mat>& gens) {
  const FieldPtr& F = v.field();
  uint32_t p = F->p();
  int n = v.nvars();
  int vi = variable_index_of(v);

  std::vector<DegEntry> entries;
  for (Poly& m : ms) {
    auto d = m.homogeneous_degree();
    auto e = d ? p_power_exponent(*d, p) : std::nullopt;
    if (!e) fail(errc::hypothesis_violated, "entries must be nonzero homogeneous of p-power degree");
    entries.push_back({std::move(m), *e});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const DegEntry& a, const DegEntry& b) { return a.e < b.e; });

  // independence check, delegated to the s.o.p. oracle when the count allows
  if (1 + entries.size() == (size_t)n) {
    std::vector<Poly> fs{v};
    for (const DegEntry& en : entries) fs.push_back(en.m);
    if (!sop_check(fs).is_sop)
      fail(errc::hypothesis_violated, "v and the entries do not form a system of parameters");
  }

  for (const Mat& g : gens) {
    if (!v.delta(g).is_zero()) fail(errc::hypothesis_violated, "a generator moves v");
    std::vector<Fq> a;
    int r = -1;
    for (size_t i = 0; i < entries.size(); ++i) {
      auto s = scalar_of(entries[i].m.delta(g), unit_monomial(n, vi, u32_p_pow(p, entries[i].e)));
      if (!s)
        fail(errc::hypothesis_violated,
             "delta of an entry is not a scalar multiple of the matching power of v");
      a.push_back(*s);
      if (r < 0 && !(*s == F->zero())) r = (int)i;
    }
    if (r < 0) continue;  // g already fixes every entry

    const Poly mr = entries[(size_t)r].m;
    const uint32_t er = entries[(size_t)r].e;
    const Fq ar = a[(size_t)r];
    Poly vpow = Poly::variable(F, n, vi).pow(u32_p_pow(p, er)).scale(ar);
    Poly y = mr.pow(p).sub(vpow.pow(p - 1).mul(mr));

    std::vector<DegEntry> next;
    for (size_t j = 0; j < entries.size(); ++j) {
      if ((int)j == r) continue;
      DegEntry nj = entries[j];
      if (!(a[j] == F->zero())) {
        uint32_t shift = u32_p_pow(p, entries[j].e) - u32_p_pow(p, er);
        Poly corr = mr.scale(F->div(a[j], ar));
        if (shift > 0) corr = corr.mul(Poly::variable(F, n, vi).pow(shift));
        nj.m = entries[j].m.sub(corr);
        if (nj.m.is_zero())
          fail(errc::hypothesis_violated, "entries are algebraically dependent over F[v]");
      }
      next.push_back(std::move(nj));
    }
    DegEntry ye{std::move(y), er + 1};
    auto pos = std::upper_bound(next.begin(), next.end(), ye,
                                [](const DegEntry& lo, const DegEntry& hi) { return lo.e < hi.e; });
    next.insert(pos, std::move(ye));
    entries = std::move(next);
  }

  std::vector<Poly> outs{v};
  for (DegEntry& en : entries) outs.push_back(std::move(en.m));
  for (const Mat& g : gens)
    for (const Poly& f : outs)
      if (!f.delta(g).is_zero())
        fail(errc::hypothesis_violated, "elimination did not reach invariance");
  return outs;
}

std::vector<Poly> cor28_generators(const Poly& v, const std::vector<Poly>& vs,
                                   const std::vector<uint32_t>& exps, const std::vector<Mat>& gens) {
  const FieldPtr& F = v.field();
  uint32_t p = F->p();
  int n = v.nvars();
  int vi = variable_index_of(v);
  if (exps.size() != vs.size() + 1)
    fail(errc::hypothesis_violated, "need one exponent for v plus one per twisted variable");
  if (!std::is_sorted(exps.begin(), exps.end()))
    fail(errc::hypothesis_violated, "exponents must be non-decreasing");
  const uint32_t e1 = exps[0];

  std::vector<int> idx;
  for (const Poly& x : vs) {
    int xi = variable_index_of(x);
    if (xi == vi) fail(errc::hypothesis_violated, "v repeated among the twisted variables");
    idx.push_back(xi);
  }
  Monomial vm = unit_monomial(n, vi, 1);
  for (const Mat& g : gens) {
    if (!v.delta(g).is_zero()) fail(errc::hypothesis_violated, "a generator moves v");
    for (size_t i = 0; i < idx.size(); ++i)
      if (!scalar_of(vs[i].delta(g), vm))
        fail(errc::hypothesis_violated, "a twisted variable is not moved along Fv");
  }

  std::vector<Poly> ms;
  for (size_t i = 0; i < idx.size(); ++i)
    ms.push_back(vs[i].pow(u32_p_pow(p, exps[i + 1] - e1)));
  std::vector<Poly> ys = prop27_generators(v, std::move(ms), gens);
  std::vector<Poly> zs;
  zs.reserve(ys.size());
  for (const Poly& y : ys) zs.push_back(y.frobenius_pow(e1));
  return zs;
}

Retriangulated retriangulate(int v_index, uint32_t e1, const std::vector<Poly>& xs, const PGroup& G) {
  Retriangulated out;
  if (xs.empty()) return out;
  const FieldPtr& F = G.F;
  uint32_t p = F->p();
  int n = G.dim;
  if (xs[0].nvars() != n || !xs[0].field()->same(*F))
    fail(errc::ring_mismatch, "entries and group live over different rings");
  Poly v = Poly::variable(F, n, v_index);
  const uint32_t q1 = u32_p_pow(p, e1);
  Poly vq = v.pow(q1);

  struct Entry {
    Poly x;
    uint32_t E;
  };
  std::vector<Entry> entries;
  for (const Poly& x : xs) {
    auto d = x.homogeneous_degree();
    auto E = d ? p_power_exponent(*d, p) : std::nullopt;
    if (!E) fail(errc::hypothesis_violated, "entries must be nonzero homogeneous of p-power degree");
    auto res = pure_power_residue(x, v_index);
    if (!res || res->h != *E)
      fail(errc::hypothesis_violated, "entry is not a twisted linear form modulo v");
    Poly lin = Poly::zero(F, n);
    for (int j = 0; j < n; ++j)
      if (!(res->u[(size_t)j] == F->zero()))
        lin = lin.add(Poly::variable(F, n, j).scale(res->u[(size_t)j]));
    if (!x.sub(lin.frobenius_pow(*E)).divisible_by_variable_power(v_index, q1))
      fail(errc::hypothesis_violated, "entry minus its twisted leading form is not divisible by the v power");
    entries.push_back({x, *E});
  }
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i].E < entries[i - 1].E)
      fail(errc::hypothesis_violated, "entry degrees must be non-decreasing");
  for (const Mat& g : G.gens)
    if (!v.delta(g).is_zero()) fail(errc::hypothesis_violated, "the group moves v");

  // the subring A = F[v^{p^{e1}}, x_2, ..., x_n] must be stable under G
  std::vector<Poly> subgens{vq};
  for (const Entry& en : entries) subgens.push_back(en.x);
  SubringBasis A(subgens);
  for (const Mat& g : G.gens)
    for (const Entry& en : entries)
      if (!A.express(en.x.apply_matrix(g)))
        fail(errc::subring_not_stable, "a group generator maps the subring outside itself");

  // per-block extraction of the induced linear action, then a flag for it
  std::vector<Poly> ys;
  size_t k = entries.size();
  size_t s = 0;
  while (s < k) {
    size_t t = s;
    while (t < k && entries[t].E == entries[s].E) ++t;
    size_t w = t - s;
    if (w == 1) {
      ys.push_back(entries[s].x);
      s = t;
      continue;
    }
    std::vector<Mat> rhos;
    for (const Mat& g : G.gens) {
      Mat rho = Mat::identity(F, (int)w);
      for (size_t i = s; i < t; ++i) {
        Poly d = entries[i].x.delta(g);
        if (d.is_zero()) continue;
        auto rep = A.express(d);
        if (!rep) fail(errc::subring_not_stable, "block delta leaves the subring");
        for (const auto& [mono, c] : rep->terms()) {
          // subring variables: 0 = v power, 1+j = entry j
          int block_var = -1;
          bool pure = true, touches_block = false;
          uint32_t lower_part = 0;
          for (size_t jj = 0; jj < mono.e.size(); ++jj) {
            if (mono.e[jj] == 0) continue;
            if (jj >= 1 + s) {
              touches_block = true;
              if (jj >= 1 + t || mono.e[jj] != 1 || block_var >= 0)
                pure = false;
              else
                block_var = (int)(jj - 1 - s);
            } else {
              lower_part += mono.e[jj];
            }
          }
          if (touches_block) {
            if (!pure || lower_part > 0)
              fail(errc::hypothesis_violated, "induced block action is not linear");
            int row = (int)(i - s);
            rho.at(row, block_var) = F->add(rho.at(row, block_var), c);
          }
        }
      }
      rhos.push_back(std::move(rho));
    }
    FlagBasis bf = triangulating_flag(F, (int)w, rhos);
    for (size_t i = 0; i < w; ++i) {
      Poly y = Poly::zero(F, n);
      for (size_t j = 0; j < w; ++j) {
        Fq lij = bf.vectors.at((int)i, (int)j);
        if (!(lij == F->zero())) y = y.add(entries[s + j].x.scale(lij));
      }
      if (y.is_zero()) fail(errc::normalization_failed, "degenerate block recombination");
      ys.push_back(std::move(y));
    }
    s = t;
  }

  // recover the linear witnesses of the recombined generators
  std::vector<std::vector<Fq>> urows;
  for (const Poly& y : ys) {
    auto res = pure_power_residue(y, v_index);
    if (!res) fail(errc::normalization_failed, "recombined generator lost its twisted leading form");
    urows.push_back(res->u);
  }
  {
    std::vector<std::vector<Fq>> rows;
    std::vector<Fq> vrow((size_t)n, F->zero());
    vrow[(size_t)v_index] = F->one();
    rows.push_back(vrow);
    for (const auto& u : urows) rows.push_back(u);
    if (rank_of(Mat::from_rows(F, rows)) != (int)rows.size())
      fail(errc::normalization_failed, "twisted leading forms do not extend v independently");
  }

  // flag property: delta(g, y_i) lies in F[v^{p^{e1}}, y_2 .. y_{i-1}]
  for (size_t i = 0; i < ys.size(); ++i) {
    std::vector<Poly> prefix{vq};
    for (size_t j = 0; j < i; ++j) prefix.push_back(ys[j]);
    SubringBasis P(prefix);
    for (const Mat& g : G.gens) {
      Poly d = ys[i].delta(g);
      if (!d.is_zero() && !P.express(d))
        fail(errc::hypothesis_violated, "flag property failed after recombination");
    }
  }

  out.ys = std::move(ys);
  out.us = std::move(urows);
  return out;
}

Dim3Normalization dim3_normalize(const PGroup& T, const FlagBasis& flag) {
  if (T.dim != 3) fail(errc::not_dimension_3, "normal form requires a dimension-3 group");
  if (!generated_by_transvections(T))
    fail(errc::not_transvection_generated, "the group is not generated by transvections");
  const FieldPtr& F = T.F;
  PGroup Tf = conjugated_group(T, flag.vectors);
  for (const Mat& m : Tf.elements)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const Fq want = (i == j) ? F->one() : F->zero();
        if (!(m.at(i, j) == want))
          fail(errc::hypothesis_violated, "flag does not triangulate the group");
      }

  Dim3Normalization N;
  N.flag = flag;
  FpSpan tau_span(F), sigma_span(F), eps_span(F);
  for (const Mat& m : transvections_in(Tf)) {
    const Fq t = m.at(1, 0);  // moves the middle vector along the fixed line
    const Fq sgm = m.at(2, 1);
    const bool tz = (t == F->zero()), sz = (sgm == F->zero());
    if (!tz && !sz)
      fail(errc::hypothesis_violated, "transvection with two independent slots");
    if (!tz) {
      if (tau_span.try_add(t)) {
        N.taus.push_back(m);
        N.tau_entries.push_back(t);
      }
    } else if (!sz) {
      if (sigma_span.try_add(sgm)) {
        N.sigmas.push_back(m);
        N.sigma_entries.push_back(sgm);
      }
    } else {
      const Fq corner = m.at(2, 0);
      if (eps_span.try_add(corner)) {
        N.epsilons.push_back(m);
        N.epsilon_entries.push_back(corner);
      }
    }
  }

  uint64_t expect = 1;
  size_t total = N.taus.size() + N.sigmas.size() + N.epsilons.size();
  for (size_t i = 0; i < total; ++i) expect *= T.p();
  if (expect != T.order)
    fail(errc::normalization_failed, "slot entries do not account for the group order");
  return N;
}

namespace {

// Mixed dimension-3 case: sigma-, tau- and epsilon-type generators together.
std::vector<Poly> dim3_mixed(const Dim3Normalization& N, const FieldPtr& F) {
  uint32_t p = F->p();
  const size_t r = N.sigmas.size(), m = N.taus.size(), n = N.epsilons.size();
  if (r == 0 || m == 0 || n == 0)
    fail(errc::normalization_failed, "mixed case requires all three generator classes");
  Poly z1 = Poly::variable(F, 3, 0);
  Poly z2 = Poly::variable(F, 3, 1);
  Poly z3 = Poly::variable(F, 3, 2);

  // chain over the epsilons, starting from the unfixed variable
  Poly z = z3;
  for (size_t i = 0; i < n; ++i) {
    Poly d = z.delta(N.epsilons[i]);
    if (d.is_zero()) fail(errc::normalization_failed, "epsilon chain stalled");
    z = z.pow(p).sub(d.pow(p - 1).mul(z));
  }
  Poly dsz = z.delta(N.sigmas[0]);
  if (dsz.is_zero()) fail(errc::normalization_failed, "first sigma fixes the epsilon chain output");
  Poly a = z.pow(p).sub(dsz.pow(p - 1).mul(z));

  // chain over the taus, keeping every stage y_0 .. y_m
  std::vector<Poly> ystage{z2};
  for (size_t i = 0; i < m; ++i) {
    Poly d = ystage.back().delta(N.taus[i]);
    if (d.is_zero()) fail(errc::zero_theta_pivot, "tau pivot vanished along the chain");
    ystage.push_back(ystage.back().pow(p).sub(d.pow(p - 1).mul(ystage.back())));
  }

  auto theta = [&](size_t l, size_t j) -> Fq {  // delta(tau_l, y_j) = theta z1^{p^j}
    auto sc = scalar_of(ystage[j].delta(N.taus[l - 1]), unit_monomial(3, 0, u32_p_pow(p, (uint32_t)j)));
    if (!sc) fail(errc::normalization_failed, "tau delta on the y chain has unexpected shape");
    return *sc;
  };
  auto alpha = [&](size_t l) -> Fq {  // delta(tau_l, z) = alpha z1^{p^n}
    auto sc = scalar_of(z.delta(N.taus[l - 1]), unit_monomial(3, 0, u32_p_pow(p, (uint32_t)n)));
    if (!sc) fail(errc::normalization_failed, "tau delta on the epsilon chain has unexpected shape");
    return *sc;
  };

  // correction pass: subtract b_{i+1} built from the xi/eta recursion
  std::vector<Fq> xs, es;
  Poly X = a;
  Poly dszp = dsz.pow(p - 1);
  const uint32_t pn = u32_p_pow(p, (uint32_t)n);
  const uint32_t pn1 = pn * p;
  for (size_t i = 0; i < m; ++i) {
    Fq al = alpha(i + 1);
    Fq num_xi = F->pow(al, p);
    Fq num_eta = al;
    for (size_t j = 1; j <= i; ++j) {
      Fq th = theta(i + 1, j - 1);
      num_xi = F->sub(num_xi, F->mul(xs[j - 1], th));
      num_eta = F->sub(num_eta, F->mul(es[j - 1], th));
    }
    Fq piv = theta(i + 1, i);
    if (piv == F->zero()) fail(errc::zero_theta_pivot, "tau pivot vanished in the correction pass");
    Fq xin = F->div(num_xi, piv);
    Fq etan = F->div(num_eta, piv);
    xs.push_back(xin);
    es.push_back(etan);
    const uint32_t pi = u32_p_pow(p, (uint32_t)i);
    Poly b = z1.pow(pn1 - pi).mul(ystage[i]).scale(xin)
                 .sub(dszp.mul(ystage[i]).mul(z1.pow(pn - pi)).scale(etan));
    X = X.sub(b);
  }
  for (size_t l = 0; l < m; ++l)
    if (!X.delta(N.taus[l]).is_zero())
      fail(errc::normalization_failed, "correction pass left a tau uncancelled");

  // extend over the remaining sigmas
  for (size_t j = 1; j < r; ++j) {
    Poly d = X.delta(N.sigmas[j]);
    if (d.is_zero()) fail(errc::normalization_failed, "sigma chain stalled");
    X = X.pow(p).sub(d.pow(p - 1).mul(X));
  }
  return {z1, ystage[m], X};
}

}  // namespace

Presentation dim3_invariants(const PGroup& T, const FlagBasis& flag) {
  Dim3Normalization N = dim3_normalize(T, flag);
  const FieldPtr& F = T.F;
  PGroup Tf = conjugated_group(T, flag.vectors);
  Poly z1 = Poly::variable(F, 3, 0);
  Poly z2 = Poly::variable(F, 3, 1);
  Poly z3 = Poly::variable(F, 3, 2);

  bool has_sigma = false, has_tau = false;
  for (const Mat& m : Tf.elements) {
    if (!(m.at(2, 1) == F->zero())) has_sigma = true;
    if (!(m.at(1, 0) == F->zero())) has_tau = true;
  }

  std::vector<Poly> gens3;
  if (!has_sigma) {
    gens3 = prop27_generators(z1, {z2, z3}, non_identity(Tf));
  } else if (!has_tau) {
    Poly aa = nakajima_chain({z1, z2}, z3, non_identity(Tf));
    gens3 = {z1, z2, aa};
  } else {
    gens3 = dim3_mixed(N, F);
  }

  std::vector<Poly> orig;
  orig.reserve(gens3.size());
  for (const Poly& f : gens3) orig.push_back(f.apply_matrix(flag.vectors));
  return certify(T, orig);
}

Presentation dim4_pipeline(const PGroup& G) {
  if (G.dim != 4) fail(errc::not_dimension_4, "the pipeline requires a dimension-4 group");
  const FieldPtr& F = G.F;
  uint32_t p = F->p();
  if (G.order == 1) {
    std::vector<Poly> vars;
    for (int i = 0; i < 4; ++i) vars.push_back(Poly::variable(F, 4, i));
    return certify(G, vars);
  }
  if (!generated_by_transvections(G))
    fail(errc::not_transvection_generated, "the group is not generated by transvections");

  FlagBasis flag = triangulating_basis(G);
  PGroup Gz = conjugated_group(G, flag.vectors);
  std::vector<Fq> e1((size_t)4, F->zero());
  e1[0] = F->one();
  QuotientSplit split = quotient_action_kernel(Gz, e1);

  // invariants of the kernel: S(V)^{H1} = F[z1, x2, x3, x4]
  Poly z1 = Poly::variable(F, 4, 0);
  std::vector<Poly> h1outs = prop27_generators(
      z1, {Poly::variable(F, 4, 1), Poly::variable(F, 4, 2), Poly::variable(F, 4, 3)},
      non_identity(split.H));
  std::vector<Poly> xsL(h1outs.begin() + 1, h1outs.end());
  uint64_t degprod = 1;
  for (const Poly& x : xsL) degprod *= *x.homogeneous_degree();
  if (degprod != split.H.order)
    fail(errc::normalization_failed, "kernel invariants do not account for the kernel order");

  Retriangulated R = retriangulate(0, 0, xsL, Gz);
  std::vector<uint32_t> fs;
  for (const Poly& y : R.ys) fs.push_back(*p_power_exponent(*y.homogeneous_degree(), p));

  // induced flag on the quotient space from the twisted leading forms
  std::vector<std::vector<Fq>> trows;
  for (const auto& u : R.us) trows.push_back({u[1], u[2], u[3]});
  Mat C2 = Mat::from_rows(F, trows);
  if (rank_of(C2) != 3)
    fail(errc::normalization_failed, "twisted leading forms do not span the quotient space");
  PGroup G2f = conjugated_group(split.Gbar, C2);
  for (const Mat& m : G2f.elements)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const Fq want = (i == j) ? F->one() : F->zero();
        if (!(m.at(i, j) == want))
          fail(errc::normalization_failed, "twisted leading forms do not triangulate the quotient");
      }

  bool any21 = false, any32 = false;
  for (const Mat& m : G2f.elements) {
    if (!(m.at(1, 0) == F->zero())) any21 = true;
    if (!(m.at(2, 1) == F->zero())) any32 = true;
  }

  Poly q1 = Poly::variable(F, 3, 0);
  Poly q2 = Poly::variable(F, 3, 1);
  Poly q3 = Poly::variable(F, 3, 2);
  std::vector<Poly> targets;
  if (!any32) {
    // the quotient moves everything along its fixed line: twisted elimination
    targets = cor28_generators(q1, {q2, q3}, {fs[0], fs[1], fs[2]}, non_identity(G2f));
  } else if (!any21) {
    // first two quotient coordinates fixed: one chain on the last one
    Poly abar = nakajima_chain({q1, q2}, q3, non_identity(G2f));
    targets = {q1.frobenius_pow(fs[0]), q2.frobenius_pow(fs[1]), abar.frobenius_pow(fs[2])};
  } else {
    // genuinely mixed quotient: needs the dimension-3 machinery
    if (!generated_by_transvections(G2f))
      fail(errc::case_dispatch_failed,
           "mixed quotient action is not generated by transvections");
    FlagBasis idflag{Mat::identity(F, 3), Mat::identity(F, 3)};
    Presentation P3 = dim3_invariants(G2f, idflag);
    targets = {q1.frobenius_pow(fs[0]), P3.gens[1].frobenius_pow(fs[1]),
               P3.gens[2].frobenius_pow(fs[2])};
  }

  std::vector<Poly> zgens{z1};
  for (const Poly& tq : targets) {
    Poly tstd = tq.apply_matrix(C2);
    Poly lifted = lift_invariant(Gz, tstd, 0, *tstd.homogeneous_degree());
    zgens.push_back(std::move(lifted));
  }

  std::vector<Poly> orig;
  orig.reserve(zgens.size());
  for (const Poly& f : zgens) orig.push_back(f.apply_matrix(flag.vectors));
  return certify(G, orig);
}

Presentation construct_invariants(const PGroup& G) {
  const FieldPtr& F = G.F;
  switch (G.dim) {
    case 1: {
      return certify(G, {Poly::variable(F, 1, 0)});
    }
    case 2: {
      if (!generated_by_transvections(G))
        fail(errc::not_transvection_generated, "the group is not generated by transvections");
      FlagBasis flag = triangulating_basis(G);
      PGroup Gf = conjugated_group(G, flag.vectors);
      std::vector<Poly> outs = prop27_generators(Poly::variable(F, 2, 0),
                                                 {Poly::variable(F, 2, 1)}, non_identity(Gf));
      std::vector<Poly> orig;
      for (const Poly& f : outs) orig.push_back(f.apply_matrix(flag.vectors));
      return certify(G, orig);
    }
    case 3: {
      if (!generated_by_transvections(G))
        fail(errc::not_transvection_generated, "the group is not generated by transvections");
      return dim3_invariants(G, triangulating_basis(G));
    }
    case 4:
      return dim4_pipeline(G);
    default:
      fail(errc::unsupported, "only dimensions 1 through 4 are supported");
  }
}

Presentation certify(const PGroup& G, const std::vector<Poly>& gens) {
  Presentation P;
  P.ring_dim = G.dim;
  P.group_order = G.order;
  P.gens = gens;
  for (const Poly& f : gens) {
    auto d = f.homogeneous_degree();
    if (!d) fail(errc::verification_failed, "candidate generators must be nonzero homogeneous");
    P.degrees.push_back(*d);
  }
  KemperResult K = kemper_criterion(G, gens);
  if (!K.polynomial)
    fail(errc::verification_failed,
         std::string("candidate presentation rejected: ") + kemper_reason_name(K.reason));
  for (const Poly& f : gens)
    if (!is_invariant(f, G, /*exhaustive=*/true))
      fail(errc::verification_failed,
           "candidate presentation rejected: not invariant under the full group");
  P.certificate.degree_product = K.degree_product;
  P.certificate.jacobian = K.jacobian;
  P.certificate.sop_witness_degree = K.sop_witness;
  P.certificate.invariance_checked = true;
  return P;
}

}  // namespace modinv
