// Acceptance gate: seven end-to-end criteria, one PASS/FAIL line each.
// Usage: acceptance <data-dir>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "modinv/construct.hpp"
#include "modinv/errors.hpp"
#include "modinv/oracle.hpp"
#include "modinv/textio.hpp"

using namespace modinv;

namespace {

std::string g_data_dir;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Presentations accepted by criteria 1, 3, 5; criterion 6 re-audits them.
struct Accepted {
  PGroup G;
  std::vector<uint32_t> degrees;
};
std::vector<Accepted> g_accepted;

GroupSpec load_data_spec(const std::string& name) {
  return load_group_spec(g_data_dir + "/" + name);
}

Fq pick(const std::vector<Fq>& pool, std::mt19937_64& rng) { return pool[rng() % pool.size()]; }

std::vector<Fq> nonzero_elements(const FieldPtr& F) {
  std::vector<Fq> out;
  for (const Fq& a : F->all_elements())
    if (!F->is_zero(a)) out.push_back(a);
  return out;
}

// A random transvection in lower-unitriangular 3x3 flag form.  The three
// shapes (moving the second row, the third row along the flag, or only the
// corner) exhaust the transvections of the full unitriangular group.
Mat random_flag_transvection(const FieldPtr& F, std::mt19937_64& rng) {
  std::vector<Fq> all(F->all_elements());
  std::vector<Fq> nz = nonzero_elements(F);
  Mat m = Mat::identity(F, 3);
  switch (rng() % 3) {
    case 0:
      m.at(1, 0) = pick(nz, rng);
      m.at(2, 0) = pick(all, rng);
      break;
    case 1:
      m.at(2, 1) = pick(nz, rng);
      m.at(2, 0) = pick(all, rng);
      break;
    default:
      m.at(2, 0) = pick(nz, rng);
      break;
  }
  return m;
}

PGroup transvection_subgroup(const PGroup& G) {
  std::vector<Mat> tv = transvections_in(G);
  if (tv.empty()) return group_enumerate({Mat::identity(G.F, G.dim)});
  return group_enumerate(tv);
}

bool is_structured_negative(errc c) {
  return c == errc::not_transvection_generated || c == errc::lift_failed ||
         c == errc::case_dispatch_failed || c == errc::verification_failed;
}

// ---------------------------------------------------------------------------

bool criterion1(std::string& note) {
  Timer t;
  Check c;
  for (auto [file, p] : {std::pair<const char*, uint32_t>{"dualpoly4_p2.spec", 2},
                         {"dualpoly4_p3.spec", 3}}) {
    GroupSpec dual = dual_spec(load_data_spec(file));
    PGroup G = group_enumerate(dual.gens);
    Presentation P = construct_invariants(G);
    std::vector<uint32_t> want = {1, 1, p, p * p};
    c.require(P.degrees == want, std::string(file) + ": wrong degrees");
    c.require(P.certificate.degree_product == (uint64_t)p * p * p &&
                  P.certificate.degree_product == G.order,
              std::string(file) + ": degree product != |T|");
    c.require(P.certificate.invariance_checked, std::string(file) + ": invariance not exhaustive");
    uint32_t bound = 1;
    for (uint32_t d : want) bound += d - 1;
    c.require(P.certificate.sop_witness_degree && *P.certificate.sop_witness_degree <= bound,
              std::string(file) + ": s.o.p. witness beyond the saturation bound");
    // the two linear generators are the fixed dual variables, and the
    // degree-p generator is w3^p - (-w1)^{p-1} w3
    auto F = dual.F;
    Poly w3 = Poly::variable(F, 4, 1), w2 = Poly::variable(F, 4, 2), w1 = Poly::variable(F, 4, 3);
    c.require(P.gens[0] == w2 && P.gens[1] == w1, std::string(file) + ": linear generators");
    Poly expect2 = w3.pow(p).sub(w1.neg().pow(p - 1).mul(w3));
    c.require(P.gens[2] == expect2, std::string(file) + ": degree-p generator shape");
    c.require(kemper_criterion(G, P.gens).polynomial, std::string(file) + ": criterion re-check");
    g_accepted.push_back({G, P.degrees});
  }
  c.require(t.seconds() < 10.0, "runtime over 10 s");
  note = c.ok ? "degrees (1,1,p,p^2) certified for p=2,3" : c.detail;
  return c.ok;
}

bool criterion2(std::string& note) {
  Timer t;
  Check c;
  for (auto [file, p] : {std::pair<const char*, uint32_t>{"dualpoly4_p2.spec", 2},
                         {"dualpoly4_p3.spec", 3}}) {
    GroupSpec spec = load_data_spec(file);
    PGroup G = group_enumerate(spec.gens);
    bool negative = false;
    try {
      (void)construct_invariants(G);
    } catch (const error& e) {
      negative = is_structured_negative(e.code());
    }
    c.require(negative, std::string(file) + ": construct did not report a structured negative");
    GradedReport r = minimal_generator_report(G, p * p);
    c.require(r.dims[p] == p + 1,
              std::string(file) + ": dim of the degree-p invariants is not p+1");
  }
  c.require(t.seconds() < 60.0, "runtime over 60 s");
  note = c.ok ? "structured negatives; degree-p invariant space has dim p+1" : c.detail;
  return c.ok;
}

bool criterion3(std::string& note) {
  Timer t;
  Check c;
  int positives = 0, converses = 0;
  for (uint32_t p : {2u, 3u}) {
    auto F = FieldCtx::make(p);
    std::mt19937_64 rng(900 + p);
    // positive half: groups generated by 1-4 random flag transvections
    for (int i = 0; i < 110 && c.ok; ++i) {
      std::vector<Mat> gens;
      size_t k = 1 + rng() % 4;
      for (size_t j = 0; j < k; ++j) gens.push_back(random_flag_transvection(F, rng));
      PGroup G = group_enumerate(gens);
      try {
        Presentation P = construct_invariants(G);
        c.require(kemper_criterion(G, P.gens).polynomial,
                  "sampled construction fails the degree-product criterion");
        g_accepted.push_back({G, P.degrees});
        ++positives;
      } catch (const error& e) {
        c.require(false, std::string("construction failed on a transvection group: ") + e.what());
      }
    }
    // converse half: random unitriangular groups with a proper transvection
    // subgroup must not be claimed polynomial
    std::vector<Fq> all(F->all_elements());
    for (int i = 0; i < 200 && c.ok; ++i) {
      std::vector<Mat> gens;
      size_t k = 1 + rng() % 2;
      for (size_t j = 0; j < k; ++j) {
        Mat m = Mat::identity(F, 3);
        m.at(1, 0) = pick(all, rng);
        m.at(2, 0) = pick(all, rng);
        m.at(2, 1) = pick(all, rng);
        gens.push_back(m);
      }
      PGroup G = group_enumerate(gens);
      if (transvection_subgroup(G).order == G.order) continue;
      ++converses;
      try {
        (void)construct_invariants(G);
        c.require(false, "a group with proper transvection subgroup was claimed polynomial");
      } catch (const error& e) {
        c.require(e.code() == errc::not_transvection_generated,
                  "unexpected failure mode on the converse samples");
      }
    }
  }
  c.require(positives >= 200, "fewer than 200 positive samples");
  c.require(converses >= 20, "fewer than 20 converse samples");
  c.require(t.seconds() < 300.0, "runtime over 5 min");
  if (c.ok)
    note = std::to_string(positives) + " constructions certified, " + std::to_string(converses) +
           " converse rejections";
  else
    note = c.detail;
  return c.ok;
}

bool criterion4(std::string& note) {
  Timer t;
  Check c;
  int cases = 0;
  for (uint32_t p : {2u, 3u}) {
    auto F = FieldCtx::make(p);
    for (int n = 2; n <= 4; ++n) {
      std::vector<Mat> elementary;
      for (int i = 0; i + 1 < n; ++i) {
        Mat m = Mat::identity(F, n);
        m.at(i, i + 1) = F->one();
        elementary.push_back(m);
      }
      PGroup U = group_enumerate(elementary);
      for (const Mat& g : transvections_in(U)) {
        for (int v = 0; v < n; ++v) {
          Poly x = Poly::variable(F, n, v);
          Poly y = nakajima_step(x, g);
          c.require(y.delta(g).is_zero(), "step output not invariant");
          c.require(y.degree() == p * 1, "step does not multiply the degree by p");
          c.require(is_monic_p_polynomial(y, v, p), "step output is not a monic p-polynomial");
          ++cases;
        }
      }
    }
  }
  c.require(cases > 0 && cases <= 4000, "unexpected case count");
  note = c.ok ? std::to_string(cases) + " transvection/variable cases" : c.detail;
  (void)t;
  return c.ok;
}

bool criterion5(std::string& note) {
  Timer t;
  Check c;
  auto F = FieldCtx::make(2);
  std::vector<Mat> elementary;
  for (int i = 0; i < 3; ++i) {
    Mat m = Mat::identity(F, 4);
    m.at(i, i + 1) = F->one();
    elementary.push_back(m);
  }
  PGroup U = group_enumerate(elementary);
  c.require(U.order == 64, "unitriangular group of the wrong order");

  auto run_one = [&](const PGroup& G) -> bool {
    // the quotient split at the top of the flag must partition the order
    FlagBasis fb = triangulating_basis(G);
    QuotientSplit qs = quotient_action_kernel(G, fb.vectors.row(0));
    c.require(qs.H.order * qs.Gbar.order == G.order, "quotient split does not partition |G|");
    try {
      Presentation P = construct_invariants(G);
      c.require(kemper_criterion(G, P.gens).polynomial, "pipeline output fails the criterion");
      c.require(hilbert_check(G, P.degrees, 8), "graded dimensions disagree up to degree 8");
      g_accepted.push_back({G, P.degrees});
      return true;
    } catch (const error& e) {
      if (!is_structured_negative(e.code()))
        c.require(false, std::string("hard failure in the pipeline: ") + e.what());
      return false;
    }
  };

  bool full_ok = run_one(U);
  c.require(full_ok, "pipeline did not complete on the full unitriangular group");

  std::vector<Mat> tv = transvections_in(U);
  std::mt19937_64 rng(4064);
  int completed = 0, sampled = 0;
  while (completed < 50 && sampled < 200 && c.ok) {
    ++sampled;
    std::vector<Mat> gens;
    size_t k = 1 + rng() % 4;
    for (size_t j = 0; j < k; ++j) gens.push_back(tv[rng() % tv.size()]);
    PGroup G = group_enumerate(gens);
    if (run_one(G)) ++completed;
  }
  c.require(completed >= 50, "fewer than 50 completed pipeline runs");
  c.require(t.seconds() < 600.0, "runtime over 10 min");
  if (c.ok)
    note = "U4(F2) degrees (1,2,4,8); " + std::to_string(completed) + "/" +
           std::to_string(sampled) + " sampled subgroups certified";
  else
    note = c.detail;
  return c.ok;
}

bool criterion6(std::string& note) {
  Timer t;
  Check c;
  for (const Accepted& a : g_accepted) {
    uint32_t maxdeg = 0;
    for (uint32_t d : a.degrees) maxdeg = std::max(maxdeg, d);
    uint32_t D = std::min<uint32_t>(12, 2 * maxdeg);
    uint32_t bad = 0;
    if (!hilbert_check(a.G, a.degrees, D, &bad)) {
      c.require(false, "graded dimension mismatch at degree " + std::to_string(bad));
      break;
    }
  }
  c.require(!g_accepted.empty(), "no accepted presentations to audit");
  note = c.ok ? std::to_string(g_accepted.size()) + " presentations audited against the oracle"
              : c.detail;
  (void)t;
  return c.ok;
}

bool criterion7(std::string& note) {
  Check c;
  // substitution composes through the matrix product
  auto F = FieldCtx::make(2, {1, 1, 1});
  Fq t = F->parse("t"), o = F->one(), z = F->zero();
  Mat M = Mat::from_rows(F, {{o, t}, {z, o}});
  Mat N = Mat::from_rows(F, {{o, z}, {o, t}});
  Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
  Poly f = x.pow(3).add(x.mul(y).scale(t)).add(y.pow(2));
  c.require(f.apply_matrix(N).apply_matrix(M) == f.apply_matrix(N.mul(M)),
            "matrix substitution does not compose contravariantly");

  // the stated images hold verbatim for the transcribed matrices
  GroupSpec s = load_data_spec("dualpoly4_p2.spec");
  Poly v = Poly::variable(s.F, 4, 0), w3 = Poly::variable(s.F, 4, 1),
       w2 = Poly::variable(s.F, 4, 2), w1 = Poly::variable(s.F, 4, 3);
  Fq xi = s.F->parse("t");
  const Mat& sigma = s.gens[0];
  const Mat& tau1 = s.gens[1];
  const Mat& tau2 = s.gens[2];
  c.require(s.gen_names == std::vector<std::string>{"sigma", "tau1", "tau2"},
            "spec file generators renamed");
  c.require(v.apply_matrix(sigma) == v.add(w2), "sigma(v) != v + w2");
  c.require(v.apply_matrix(tau1) == v.add(w1), "tau1(v) != v + w1");
  c.require(w3.apply_matrix(tau1) == w3.add(w1), "tau1(w3) != w3 + w1");
  c.require(w3.apply_matrix(tau2) == w3.add(w1.scale(xi)), "tau2(w3) != w3 + xi w1");
  c.require(w2.apply_matrix(sigma) == w2 && w1.apply_matrix(sigma) == w1,
            "sigma moves the fixed variables");
  note = c.ok ? "composition order and stated images pinned" : c.detail;
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <data-dir>\n");
    return 1;
  }
  g_data_dir = argv[1];

  struct Criterion {
    int id;
    const char* name;
    bool (*fn)(std::string&);
  };
  const Criterion table[] = {
      {1, "dual-action reproduction (p=2, p=3)", criterion1},
      {2, "non-polynomial diagnosis with oracle cross-check", criterion2},
      {3, "random dimension-3 transvection groups and converses", criterion3},
      {4, "substitution-step unit properties", criterion4},
      {5, "dimension-4 pipeline on unitriangular subgroups", criterion5},
      {6, "graded-dimension audit of accepted presentations", criterion6},
      {7, "convention pinning", criterion7},
  };

  int failed = 0;
  for (const Criterion& cr : table) {
    Timer t;
    std::string note;
    bool ok = false;
    try {
      ok = cr.fn(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("unexpected exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::printf("%s  criterion %d: %s — %s (%.1f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name,
                note.c_str(), t.seconds());
    std::fflush(stdout);
  }
  std::printf("ACCEPTANCE: %d/7 criteria passed\n", 7 - failed);
  return failed == 0 ? 0 : 1;
}
