#include "modinv/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "modinv/errors.hpp"

namespace modinv {

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

std::string drop_comment(const std::string& line) {
  size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum((unsigned char)c) || c == '_')) return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// "key = value" with a known key; returns the value or absent
std::optional<std::string> keyed(const std::string& line, const std::string& key) {
  size_t eq = line.find('=');
  if (eq == std::string::npos) return std::nullopt;
  if (strip(line.substr(0, eq)) != key) return std::nullopt;
  return strip(line.substr(eq + 1));
}

long long parse_int(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(errc::parse_error, std::string("invalid integer for ") + what + ": '" + s + "'");
  }
}

// matrix literal [[a,b],[c,d]] with field-element entries
Mat parse_matrix(const std::string& text, const FieldPtr& F, int dim) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s.push_back(c);
  size_t i = 0;
  auto expect = [&](char c) {
    if (i >= s.size() || s[i] != c)
      fail(errc::parse_error, std::string("matrix literal: expected '") + c + "'");
    ++i;
  };
  expect('[');
  std::vector<std::vector<Fq>> rows;
  while (true) {
    expect('[');
    std::vector<Fq> row;
    while (true) {
      size_t j = i;
      int depth = 0;
      while (j < s.size() && (depth > 0 || (s[j] != ',' && s[j] != ']'))) {
        if (s[j] == '(') ++depth;
        if (s[j] == ')') --depth;
        ++j;
      }
      if (j >= s.size()) fail(errc::parse_error, "matrix literal: unterminated row");
      row.push_back(F->parse(s.substr(i, j - i)));
      i = j;
      if (s[i] == ']') break;
      ++i;  // comma
    }
    ++i;  // closing row bracket
    rows.push_back(std::move(row));
    if (i >= s.size()) fail(errc::parse_error, "matrix literal: unterminated matrix");
    if (s[i] == ']') break;
    if (s[i] != ',') fail(errc::parse_error, "matrix literal: expected ',' between rows");
    ++i;
  }
  ++i;
  if (i != s.size()) fail(errc::parse_error, "matrix literal: trailing characters");
  if ((int)rows.size() != dim)
    fail(errc::parse_error, "matrix literal: wrong number of rows");
  for (const auto& r : rows)
    if ((int)r.size() != dim) fail(errc::parse_error, "matrix literal: wrong row length");
  return Mat::from_rows(F, rows);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write file: " + path);
  out << text;
}

GroupSpec parse_group_spec_text(const std::string& text) {
  GroupSpec spec;
  std::optional<uint32_t> p;
  std::optional<std::string> field_text;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(drop_comment(raw));
    if (line.empty()) continue;
    auto where = [&]() { return " (line " + std::to_string(lineno) + ")"; };

    if (auto v = keyed(line, "p")) {
      long long pv = parse_int(*v, "p");
      if (pv < 2 || pv > 0xFFFF) fail(errc::parse_error, "p out of range" + where());
      p = (uint32_t)pv;
      continue;
    }
    if (auto v = keyed(line, "field")) {
      field_text = *v;
      continue;
    }
    if (auto v = keyed(line, "dim")) {
      long long d = parse_int(*v, "dim");
      if (d < 1 || d > 16) fail(errc::parse_error, "dim out of range" + where());
      spec.dim = (int)d;
      continue;
    }
    if (auto v = keyed(line, "basis")) {
      spec.basis = split_ws(*v);
      for (const auto& b : spec.basis)
        if (!valid_name(b)) fail(errc::parse_error, "invalid basis name '" + b + "'" + where());
      continue;
    }
    if (line.rfind("gen ", 0) == 0) {
      size_t eq = line.find('=');
      if (eq == std::string::npos) fail(errc::parse_error, "gen line needs '='" + where());
      std::string name = strip(line.substr(4, eq - 4));
      if (!valid_name(name)) fail(errc::parse_error, "invalid generator name" + where());
      if (!p || spec.dim == 0)
        fail(errc::parse_error, "gen line before p/dim" + where());
      if (!spec.F) {
        spec.F = field_text ? FieldCtx::make(*p, parse_modulus_text(*field_text, *p))
                            : FieldCtx::make(*p);
      }
      spec.gen_names.push_back(name);
      spec.gens.push_back(parse_matrix(strip(line.substr(eq + 1)), spec.F, spec.dim));
      continue;
    }
    fail(errc::parse_error, "unrecognized line: '" + line + "'" + where());
  }
  if (!p) fail(errc::parse_error, "missing p");
  if (spec.dim == 0) fail(errc::parse_error, "missing dim");
  if (!spec.F)
    spec.F = field_text ? FieldCtx::make(*p, parse_modulus_text(*field_text, *p))
                        : FieldCtx::make(*p);
  if (spec.basis.empty()) {
    for (int i = 0; i < spec.dim; ++i) spec.basis.push_back("x" + std::to_string(i + 1));
  }
  if ((int)spec.basis.size() != spec.dim)
    fail(errc::parse_error, "basis must list exactly dim names");
  for (size_t i = 0; i < spec.basis.size(); ++i)
    for (size_t j = i + 1; j < spec.basis.size(); ++j)
      if (spec.basis[i] == spec.basis[j])
        fail(errc::parse_error, "duplicate basis name '" + spec.basis[i] + "'");
  return spec;
}

GroupSpec load_group_spec(const std::string& path) {
  return parse_group_spec_text(read_text_file(path));
}

std::string group_spec_to_text(const GroupSpec& spec) {
  std::ostringstream out;
  out << "p = " << spec.F->p() << "\n";
  if (spec.F->k() > 1) {
    std::vector<uint32_t> coeffs = spec.F->modulus_tail();
    coeffs.push_back(1);  // monic head
    out << "field = " << modulus_to_string(coeffs) << "\n";
  }
  out << "dim = " << spec.dim << "\n";
  out << "basis =";
  for (const auto& b : spec.basis) out << " " << b;
  out << "\n";
  for (size_t g = 0; g < spec.gens.size(); ++g) {
    out << "gen " << spec.gen_names[g] << " = [";
    for (int i = 0; i < spec.dim; ++i) {
      out << (i ? ",[" : "[");
      for (int j = 0; j < spec.dim; ++j) {
        if (j) out << ",";
        out << spec.F->to_string(spec.gens[g].at(i, j));
      }
      out << "]";
    }
    out << "]\n";
  }
  return out.str();
}

GroupSpec dual_spec(const GroupSpec& spec) {
  GroupSpec d = spec;
  bool all_prefixed = !spec.basis.empty();
  for (const auto& b : spec.basis)
    if (b.size() < 2 || b[0] != 'd') all_prefixed = false;
  if (all_prefixed) {
    std::vector<std::string> stripped;
    for (const auto& b : spec.basis) stripped.push_back(b.substr(1));
    bool distinct = true;
    for (size_t i = 0; i < stripped.size() && distinct; ++i) {
      if (!valid_name(stripped[i])) distinct = false;
      for (size_t j = i + 1; j < stripped.size(); ++j)
        if (stripped[i] == stripped[j]) distinct = false;
    }
    if (distinct)
      d.basis = stripped;
    else
      all_prefixed = false;
  }
  if (!all_prefixed)
    for (auto& b : d.basis) b = "d" + b;
  for (auto& g : d.gens) g = dual_matrix(g);
  return d;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const FieldPtr& F, const std::vector<std::string>& names)
      : s_(text), F_(F), names_(names) {}

  Poly run() {
    Poly out = Poly::zero(F_, (int)names_.size());
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    out = out.add(term(neg));
    while (true) {
      skip_ws();
      if (accept('+'))
        out = out.add(term(false));
      else if (accept('-'))
        out = out.add(term(true));
      else
        break;
    }
    skip_ws();
    if (i_ != s_.size()) fail(errc::parse_error, "trailing characters in polynomial");
    return out;
  }

 private:
  Poly term(bool negate) {
    Fq coeff = F_->one();
    Monomial mono;
    mono.e.assign(names_.size(), 0);
    bool first = true;
    while (true) {
      skip_ws();
      if (!first && !accept('*')) break;
      skip_ws();
      if (i_ >= s_.size()) {
        if (first) fail(errc::parse_error, "empty term in polynomial");
        fail(errc::parse_error, "dangling '*' in polynomial");
      }
      char c = s_[i_];
      if (c == '(') {
        ++i_;
        size_t j = i_;
        int depth = 1;
        while (j < s_.size() && depth) {
          if (s_[j] == '(') ++depth;
          if (s_[j] == ')') --depth;
          ++j;
        }
        if (depth) fail(errc::parse_error, "unbalanced parentheses");
        coeff = F_->mul(coeff, F_->parse(s_.substr(i_, j - 1 - i_)));
        i_ = j;
      } else if (std::isdigit((unsigned char)c)) {
        size_t j = i_;
        while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
        coeff = F_->mul(coeff, F_->parse(s_.substr(i_, j - i_)));
        i_ = j;
      } else if (std::isalpha((unsigned char)c) || c == '_') {
        size_t j = i_;
        while (j < s_.size() && (std::isalnum((unsigned char)s_[j]) || s_[j] == '_')) ++j;
        std::string name = s_.substr(i_, j - i_);
        i_ = j;
        uint64_t e = 1;
        skip_ws();
        if (accept('^')) {
          skip_ws();
          size_t k = i_;
          while (k < s_.size() && std::isdigit((unsigned char)s_[k])) ++k;
          if (k == i_) fail(errc::parse_error, "'^' needs an integer exponent");
          e = (uint64_t)parse_int(s_.substr(i_, k - i_), "exponent");
          i_ = k;
        }
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it != names_.end()) {
          size_t vi = (size_t)(it - names_.begin());
          if (e > kDegreeCap || mono.e[vi] + e > kDegreeCap)
            fail(errc::cap_exceeded, "exponent exceeds the degree cap");
          mono.e[vi] += (uint32_t)e;
        } else if (name == "t" && F_->k() > 1) {
          coeff = F_->mul(coeff, F_->pow(F_->parse("t"), e));
        } else {
          fail(errc::parse_error, "unknown variable '" + name + "'");
        }
      } else {
        fail(errc::parse_error, std::string("unexpected character '") + c + "' in polynomial");
      }
      first = false;
    }
    if (negate) coeff = F_->neg(coeff);
    Poly out = Poly::zero(F_, (int)names_.size());
    out.add_term(mono, coeff);
    return out;
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
  }
  bool accept(char c) {
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  const std::string& s_;
  size_t i_ = 0;
  FieldPtr F_;
  const std::vector<std::string>& names_;
};

}  // namespace

Poly parse_poly(const std::string& text, const FieldPtr& F, const std::vector<std::string>& names) {
  return PolyParser(text, F, names).run();
}

std::string poly_to_string(const Poly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  const FieldPtr& F = f.field();
  std::ostringstream out;
  bool first_term = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first_term) out << " + ";
    first_term = false;
    std::string cs = F->to_string(c);
    bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
    bool unit = (c == F->one());
    bool wrote = false;
    if (m.degree() == 0) {
      out << (composite ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit) {
      out << (composite ? "(" + cs + ")" : cs);
      wrote = true;
    }
    for (size_t v = 0; v < m.e.size(); ++v) {
      if (m.e[v] == 0) continue;
      if (wrote) out << "*";
      out << names[v];
      if (m.e[v] > 1) out << "^" << m.e[v];
      wrote = true;
    }
  }
  return out.str();
}

std::vector<Poly> load_generators(const std::string& path, const FieldPtr& F,
                                  const std::vector<std::string>& names) {
  std::istringstream in(read_text_file(path));
  std::vector<Poly> out;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip(drop_comment(raw));
    if (line.empty()) continue;
    out.push_back(parse_poly(line, F, names));
  }
  return out;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::skipped: return "skipped";
    case Tri::nonzero: return "nonzero";
    case Tri::zero: return "zero";
  }
  return "unknown";
}

std::string presentation_to_text(const Presentation& P, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "status = polynomial\n";
  out << "ring_dim = " << P.ring_dim << "\n";
  out << "group_order = " << P.group_order << "\n";
  out << "degrees =";
  for (uint32_t d : P.degrees) out << " " << d;
  out << "\n";
  out << "degree_product = " << P.certificate.degree_product << "\n";
  out << "jacobian = " << tri_name(P.certificate.jacobian) << "\n";
  if (P.certificate.sop_witness_degree)
    out << "sop_witness_degree = " << *P.certificate.sop_witness_degree << "\n";
  else
    out << "sop_witness_degree = none\n";
  out << "invariance = " << (P.certificate.invariance_checked ? "all-elements" : "generators") << "\n";
  for (size_t i = 0; i < P.gens.size(); ++i)
    out << "gen " << (i + 1) << " = " << poly_to_string(P.gens[i], names) << "\n";
  return out.str();
}

std::string graded_report_to_text(const GradedReport& R) {
  std::ostringstream out;
  out << "degree  dim  new_generators\n";
  for (size_t i = 0; i < R.degrees.size(); ++i) {
    std::string d = std::to_string(R.degrees[i]);
    std::string dim = std::to_string(R.dims[i]);
    out << d << std::string(d.size() < 8 ? 8 - d.size() : 1, ' ')
        << dim << std::string(dim.size() < 5 ? 5 - dim.size() : 1, ' ')
        << R.mingen_counts[i] << "\n";
  }
  return out.str();
}

}  // namespace modinv
