#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modinv/textio.hpp"

namespace modinv {

// Command-line front end.  Each cmd_* function is pure text-in/text-out so the
// same code paths are exercised by the binary and by tests; run_cli handles
// file loading, dispatch, error-to-exit-code mapping, and --out redirection.

struct RunConfig {
  std::string command;  // classify | construct | verify | oracle | dual
  std::string spec_path;
  std::optional<uint32_t> max_degree;
  std::optional<std::string> gens_path;
  std::optional<std::string> out_path;
  uint64_t seed = 0;
};

struct CmdResult {
  int exit_code = 0;  // 0 pass, 2 structured mathematical negative
  std::string text;
};

CmdResult cmd_classify(const GroupSpec& spec);
CmdResult cmd_construct(const GroupSpec& spec);
CmdResult cmd_verify(const GroupSpec& spec, const std::vector<Poly>& gens,
                     std::optional<uint32_t> max_degree);
CmdResult cmd_oracle(const GroupSpec& spec, uint32_t max_degree);
CmdResult cmd_dual(const GroupSpec& spec);

// Returns the process exit code: 0 pass, 2 structured negative, 1 usage or
// parse errors.  Output text (reports and error diagnostics alike) goes to
// cfg.out_path when set, else to standard output; `captured` when non-null
// receives a copy instead of stdout.
int run_cli(const RunConfig& cfg, std::string* captured = nullptr);

inline constexpr uint32_t kOracleDefaultMaxDegree = 6;
inline constexpr uint32_t kVerifyDegreeCeiling = 12;

}  // namespace modinv
