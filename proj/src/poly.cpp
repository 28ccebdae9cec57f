#include "modinv/poly.hpp"

#include <algorithm>

namespace modinv {

Poly Poly::constant(FieldPtr F, int nvars, const Fq& c) {
  Poly f(F, nvars);
  Monomial one;
  one.e.assign(nvars, 0);
  f.add_term(one, c);
  return f;
}

Poly Poly::variable(FieldPtr F, int nvars, int i) {
  Poly f(F, nvars);
  Monomial m;
  m.e.assign(nvars, 0);
  m.e[i] = 1;
  f.add_term(m, F->one());
  return f;
}

uint32_t Poly::degree() const {
  if (t_.empty()) return 0;
  return t_.begin()->first.degree();  // leading term has maximal degree
}

std::optional<uint32_t> Poly::homogeneous_degree() const {
  if (t_.empty()) return std::nullopt;
  uint32_t d = t_.begin()->first.degree();
  if (t_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

Fq Poly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? F_->zero() : it->second;
}

void Poly::add_term(const Monomial& m, const Fq& c) {
  if ((int)m.e.size() != n_) fail(errc::ring_mismatch, "monomial arity mismatch");
  if (m.degree() > kDegreeCap) fail(errc::cap_exceeded, "degree cap exceeded");
  if (F_->is_zero(c)) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second = F_->add(it->second, c);
    if (F_->is_zero(it->second)) t_.erase(it);
  }
}

void Poly::check_ring(const Poly& o) const {
  if (n_ != o.n_) fail(errc::ring_mismatch, "polynomials have different numbers of variables");
  if (!F_->same(*o.F_)) fail(errc::ring_mismatch, "polynomials over different fields");
}

Poly Poly::add(const Poly& o) const {
  check_ring(o);
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::sub(const Poly& o) const {
  check_ring(o);
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, F_->neg(c));
  return r;
}

Poly Poly::neg() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = F_->neg(c);
  return r;
}

Poly Poly::scale(const Fq& c) const {
  Poly r(F_, n_);
  if (F_->is_zero(c)) return r;
  for (const auto& [m, a] : t_) r.add_term(m, F_->mul(a, c));
  return r;
}

Poly Poly::mul(const Poly& o) const {
  check_ring(o);
  Poly r(F_, n_);
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) {
      Monomial m;
      m.e.resize(n_);
      for (int i = 0; i < n_; ++i) {
        uint64_t s = (uint64_t)ma.e[i] + mb.e[i];
        if (s > kDegreeCap) fail(errc::cap_exceeded, "degree cap exceeded in mul");
        m.e[i] = (uint32_t)s;
      }
      r.add_term(m, F_->mul(ca, cb));
    }
  return r;
}

Poly Poly::pow(uint64_t e) const {
  Poly r = Poly::constant(F_, n_, F_->one());
  Poly base = *this;
  while (e) {
    if (e & 1) r = r.mul(base);
    if (e >>= 1) base = base.mul(base);
  }
  return r;
}

Poly Poly::frobenius_pow(uint32_t e) const {
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= F_->p();
    if (q > kDegreeCap) fail(errc::cap_exceeded, "Frobenius power exceeds degree cap");
  }
  Poly r(F_, n_);
  for (const auto& [m, c] : t_) {
    Monomial me;
    me.e.resize(n_);
    for (int i = 0; i < n_; ++i) {
      uint64_t s = (uint64_t)m.e[i] * q;
      if (s > kDegreeCap) fail(errc::cap_exceeded, "degree cap exceeded in frobenius_pow");
      me.e[i] = (uint32_t)s;
    }
    r.add_term(me, F_->pow(c, q));
  }
  return r;
}

Poly Poly::mul_variable_power(int var, uint32_t e) const {
  Poly r(F_, n_);
  for (const auto& [m, c] : t_) {
    Monomial me = m;
    uint64_t s = (uint64_t)me.e[var] + e;
    if (s > kDegreeCap) fail(errc::cap_exceeded, "degree cap exceeded");
    me.e[var] = (uint32_t)s;
    r.add_term(me, c);
  }
  return r;
}

MatrixAction::MatrixAction(const Mat& g, int nvars) : F_(g.field()), n_(nvars) {
  if (g.rows() != n_ || g.cols() != n_) fail(errc::ring_mismatch, "matrix dimension mismatch");
  forms_.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    Poly L(F_, n_);
    Monomial m;
    m.e.assign(n_, 0);
    for (int j = 0; j < n_; ++j) {
      if (F_->is_zero(g.at(i, j))) continue;
      m.e[j] = 1;
      L.add_term(m, g.at(i, j));
      m.e[j] = 0;
    }
    forms_.push_back(L);
  }
  pows_.resize(n_);
}

const Poly& MatrixAction::form_power(int i, uint32_t e) {
  auto it = pows_[i].find(e);
  if (it != pows_[i].end()) return it->second;
  Poly pe = forms_[i].pow(e);
  return pows_[i].emplace(e, std::move(pe)).first->second;
}

Poly MatrixAction::apply_monomial(const Monomial& m) {
  Poly term = Poly::constant(F_, n_, F_->one());
  for (int i = 0; i < n_; ++i)
    if (m.e[i] > 0) term = term.mul(form_power(i, m.e[i]));
  return term;
}

Poly MatrixAction::apply(const Poly& f) {
  if (f.nvars() != n_ || !F_->same(*f.field()))
    fail(errc::ring_mismatch, "polynomial ring mismatch in matrix action");
  Poly r(F_, n_);
  for (const auto& [m, c] : f.terms()) r = r.add(apply_monomial(m).scale(c));
  return r;
}

Poly Poly::apply_matrix(const Mat& g) const {
  if (!F_->same(*g.field())) fail(errc::ring_mismatch, "matrix over a different field");
  MatrixAction act(g, n_);
  return act.apply(*this);
}

Poly Poly::delta(const Mat& g) const { return apply_matrix(g).sub(*this); }

Poly Poly::partial(int var) const {
  Poly r(F_, n_);
  uint32_t p = F_->p();
  for (const auto& [m, c] : t_) {
    uint32_t e = m.e[var];
    if (e == 0 || e % p == 0) continue;  // char-p annihilation
    Monomial me = m;
    me.e[var] = e - 1;
    r.add_term(me, F_->mul(c, F_->from_int((long long)(e % p))));
  }
  return r;
}

Poly Poly::quotient_mod_variable(int var) const {
  Poly r(F_, n_ - 1);
  for (const auto& [m, c] : t_) {
    if (m.e[var] != 0) continue;
    Monomial me;
    me.e.reserve(n_ - 1);
    for (int i = 0; i < n_; ++i)
      if (i != var) me.e.push_back(m.e[i]);
    r.add_term(me, c);
  }
  return r;
}

bool Poly::divisible_by_variable_power(int var, uint32_t e) const {
  for (const auto& [m, c] : t_) {
    (void)c;
    if (m.e[var] < e) return false;
  }
  return true;
}

std::vector<Monomial> graded_piece(int nvars, uint32_t d) {
  std::vector<Monomial> out;
  Monomial cur;
  cur.e.assign(nvars, 0);
  // lexicographic descent: first variable takes the largest share first
  auto rec = [&](auto&& self, int var, uint32_t rem) -> void {
    if (var == nvars - 1) {
      cur.e[var] = rem;
      out.push_back(cur);
      cur.e[var] = 0;
      return;
    }
    for (uint32_t take = rem + 1; take-- > 0;) {
      cur.e[var] = take;
      self(self, var + 1, rem - take);
    }
    cur.e[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

namespace {

Poly det_rec(const std::vector<std::vector<Poly>>& m, std::vector<int> cols, int row) {
  const Poly& probe = m[0][0];
  if (cols.size() == 1) return m[row][cols[0]];
  Poly acc = Poly::zero(probe.field(), probe.nvars());
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    const Poly& entry = m[row][cols[ci]];
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t cj = 0; cj < cols.size(); ++cj)
      if (cj != ci) rest.push_back(cols[cj]);
    Poly minor = det_rec(m, rest, row + 1);
    Poly contrib = entry.mul(minor);
    acc = (ci % 2 == 0) ? acc.add(contrib) : acc.sub(contrib);
  }
  return acc;
}

}  // namespace

Poly jacobian_det(const std::vector<Poly>& fs) {
  int n = (int)fs.size();
  if (n == 0) fail(errc::wrong_count, "jacobian of an empty family");
  for (const Poly& f : fs)
    if (f.nvars() != n) fail(errc::ring_mismatch, "jacobian needs n polynomials in n variables");
  std::vector<std::vector<Poly>> J(n, std::vector<Poly>(n, Poly::zero(fs[0].field(), n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) J[i][j] = fs[i].partial(j);
  std::vector<int> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = j;
  return det_rec(J, cols, 0);
}

std::vector<Fq> coeff_vector(const Poly& f, const std::vector<Monomial>& basis) {
  std::vector<Fq> v;
  v.reserve(basis.size());
  for (const Monomial& m : basis) v.push_back(f.coeff(m));
  return v;
}

Poly poly_from_coeffs(FieldPtr F, int nvars, const std::vector<Monomial>& basis,
                      const std::vector<Fq>& coeffs) {
  Poly f(F, nvars);
  for (size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
  return f;
}

}  // namespace modinv
