#include "modinv/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "modinv/errors.hpp"

namespace modinv {

namespace {

Poly linear_form(const FieldPtr& F, const std::vector<Fq>& row) {
  Poly f = Poly::zero(F, (int)row.size());
  for (size_t j = 0; j < row.size(); ++j) {
    if (F->is_zero(row[j])) continue;
    Monomial m;
    m.e.assign(row.size(), 0);
    m.e[j] = 1;
    f.add_term(m, row[j]);
  }
  return f;
}

std::string join_rows_as_forms(const Mat& rows, const std::vector<std::string>& names) {
  std::ostringstream out;
  for (int i = 0; i < rows.rows(); ++i) {
    if (i) out << ", ";
    out << poly_to_string(linear_form(rows.field(), rows.row(i)), names);
  }
  return out.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

CmdResult cmd_classify(const GroupSpec& spec) {
  PGroup G = group_enumerate(spec.gens);
  std::ostringstream out;
  out << "group_order = " << G.order << "\n";
  out << "prime = " << G.p() << "\n";
  out << "field_size = " << G.F->size() << "\n";
  out << "dim = " << G.dim << "\n";
  out << "abelian = " << yn(is_abelian(G)) << "\n";
  out << "elementary_abelian = " << yn(is_elementary_abelian(G)) << "\n";
  out << "transvection_count = " << transvections_in(G).size() << "\n";
  out << "generated_by_transvections = " << yn(generated_by_transvections(G)) << "\n";
  Mat fs = fixed_space(G);
  out << "fixed_space_dim = " << fs.rows() << "\n";
  out << "fixed_space = " << join_rows_as_forms(fs, spec.basis) << "\n";
  FlagBasis flag = triangulating_basis(G);
  out << "flag = " << join_rows_as_forms(flag.vectors, spec.basis) << "\n";
  if (G.dim == 4) {
    // Orders of the pointwise stabilizers G_U for each plane U spanned by a
    // pair of flag vectors.
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        Mat U = Mat::from_rows(G.F, {flag.vectors.row(i), flag.vectors.row(j)});
        PGroup GU = pointwise_stabilizer(G, U);
        out << "pair_stabilizer_order f" << (i + 1) << " f" << (j + 1) << " = " << GU.order
            << "\n";
      }
    }
  }
  return {0, out.str()};
}

CmdResult cmd_construct(const GroupSpec& spec) {
  PGroup G = group_enumerate(spec.gens);
  try {
    Presentation P = construct_invariants(G);
    return {0, presentation_to_text(P, spec.basis)};
  } catch (const error& e) {
    switch (e.code()) {
      case errc::not_transvection_generated:
      case errc::lift_failed:
      case errc::case_dispatch_failed:
      case errc::verification_failed: {
        std::ostringstream out;
        out << "status = not_polynomial\n";
        out << "stage = " << errc_name(e.code()) << "\n";
        out << "detail = " << e.what() << "\n";
        return {2, out.str()};
      }
      default:
        throw;
    }
  }
}

CmdResult cmd_verify(const GroupSpec& spec, const std::vector<Poly>& gens,
                     std::optional<uint32_t> max_degree) {
  PGroup G = group_enumerate(spec.gens);
  if ((int)gens.size() != spec.dim)
    fail(errc::wrong_generator_count, "expected " + std::to_string(spec.dim) +
                                          " generators, got " + std::to_string(gens.size()));
  std::ostringstream out;
  out << "group_order = " << G.order << "\n";
  out << "generator_count = " << gens.size() << "\n";

  bool all_homogeneous = true;
  std::vector<uint32_t> degrees;
  uint32_t max_gen_degree = 1;
  for (const auto& f : gens) {
    auto hd = f.homogeneous_degree();
    if (!hd) {
      all_homogeneous = false;
      break;
    }
    degrees.push_back(*hd);
    max_gen_degree = std::max(max_gen_degree, *hd);
  }
  if (all_homogeneous) {
    out << "degrees =";
    for (uint32_t d : degrees) out << " " << d;
    out << "\n";
  }

  KemperResult K = kemper_criterion(G, gens);
  out << "degree_product = " << K.degree_product << "\n";
  out << "kemper = " << (K.polynomial ? "pass" : "fail") << "\n";
  if (!K.polynomial) {
    out << "reason = " << kemper_reason_name(K.reason) << "\n";
    out << "status = fail\n";
    return {2, out.str()};
  }
  out << "jacobian = " << tri_name(K.jacobian) << "\n";
  if (K.sop_witness) out << "sop_witness_degree = " << *K.sop_witness << "\n";

  uint32_t D = max_degree ? *max_degree
                          : std::min<uint32_t>(kVerifyDegreeCeiling, 2 * max_gen_degree);
  if (D < 1) D = 1;
  out << "hilbert_max_degree = " << D << "\n";
  uint32_t mismatch = 0;
  bool hok = hilbert_check(G, degrees, D, &mismatch);
  out << "hilbert = " << (hok ? "pass" : "fail") << "\n";
  if (!hok) {
    out << "hilbert_mismatch_degree = " << mismatch << "\n";
    out << "status = fail\n";
    return {2, out.str()};
  }
  out << "status = pass\n";
  return {0, out.str()};
}

CmdResult cmd_oracle(const GroupSpec& spec, uint32_t max_degree) {
  PGroup G = group_enumerate(spec.gens);
  GradedReport R = minimal_generator_report(G, max_degree);
  std::ostringstream out;
  out << "group_order = " << G.order << "\n";
  out << "max_degree = " << max_degree << "\n";
  out << graded_report_to_text(R);
  return {0, out.str()};
}

CmdResult cmd_dual(const GroupSpec& spec) {
  for (const auto& g : spec.gens)
    if (g.field()->is_zero(det(g))) fail(errc::singular_generator, "dual of a singular matrix");
  return {0, group_spec_to_text(dual_spec(spec))};
}

int run_cli(const RunConfig& cfg, std::string* captured) {
  CmdResult r;
  try {
    GroupSpec spec = load_group_spec(cfg.spec_path);
    if (cfg.command == "classify") {
      r = cmd_classify(spec);
    } else if (cfg.command == "construct") {
      r = cmd_construct(spec);
    } else if (cfg.command == "verify") {
      if (!cfg.gens_path) fail(errc::parse_error, "verify requires --gens FILE");
      std::vector<Poly> gens = load_generators(*cfg.gens_path, spec.F, spec.basis);
      r = cmd_verify(spec, gens, cfg.max_degree);
    } else if (cfg.command == "oracle") {
      uint32_t D = cfg.max_degree ? *cfg.max_degree : kOracleDefaultMaxDegree;
      if (D < 1) fail(errc::parse_error, "--max-degree must be at least 1");
      r = cmd_oracle(spec, D);
    } else if (cfg.command == "dual") {
      r = cmd_dual(spec);
    } else {
      fail(errc::parse_error, "unknown command '" + cfg.command + "'");
    }
  } catch (const error& e) {
    r.exit_code = 1;
    r.text = std::string("error = ") + e.what() + "\n";
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.text = std::string("error = ") + e.what() + "\n";
  }
  if (captured) {
    *captured = r.text;
  } else if (cfg.out_path) {
    try {
      write_text_file(*cfg.out_path, r.text);
    } catch (const error& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}

}  // namespace modinv
