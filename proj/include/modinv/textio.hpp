#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modinv/construct.hpp"
#include "modinv/group.hpp"
#include "modinv/oracle.hpp"
#include "modinv/poly.hpp"

namespace modinv {

// Line-oriented text formats: group-spec files, polynomial syntax, and the
// deterministic report documents emitted by the command-line front end.

struct GroupSpec {
  FieldPtr F;
  int dim = 0;
  std::vector<std::string> basis;      // variable names, in order
  std::vector<std::string> gen_names;  // aligned with gens
  std::vector<Mat> gens;
};

GroupSpec parse_group_spec_text(const std::string& text);
GroupSpec load_group_spec(const std::string& path);
std::string group_spec_to_text(const GroupSpec& spec);

// Dual action: matrices J (M^{-1})^T J with basis names toggled through a
// "d" prefix (added, or stripped when already present on every name).
GroupSpec dual_spec(const GroupSpec& spec);

// Polynomial text: '+'/'-'-separated terms, '*' products, '^' powers,
// coefficients in field-element syntax (parenthesized when composite).
Poly parse_poly(const std::string& text, const FieldPtr& F, const std::vector<std::string>& names);
std::string poly_to_string(const Poly& f, const std::vector<std::string>& names);

// One polynomial per non-blank, non-comment line.
std::vector<Poly> load_generators(const std::string& path, const FieldPtr& F,
                                  const std::vector<std::string>& names);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string presentation_to_text(const Presentation& P, const std::vector<std::string>& names);
std::string graded_report_to_text(const GradedReport& R);

const char* tri_name(Tri t);

}  // namespace modinv
