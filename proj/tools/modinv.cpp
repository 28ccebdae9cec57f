#include <CLI11.hpp>

#include "modinv/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariant rings of finite p-groups in characteristic p"};
  modinv::RunConfig cfg;
  uint32_t max_degree = 0;
  std::string gens_path, out_path;

  app.add_option("command", cfg.command, "classify | construct | verify | oracle | dual")
      ->required()
      ->check(CLI::IsMember({"classify", "construct", "verify", "oracle", "dual"}));
  app.add_option("spec-file", cfg.spec_path, "group-spec file")->required();
  auto* md = app.add_option("--max-degree", max_degree, "degree bound (oracle, verify)");
  auto* gp = app.add_option("--gens", gens_path, "candidate generator file (verify)");
  auto* op = app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--seed", cfg.seed, "seed for randomized property commands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit 1
  }
  if (md->count()) cfg.max_degree = max_degree;
  if (gp->count()) cfg.gens_path = gens_path;
  if (op->count()) cfg.out_path = out_path;
  return modinv::run_cli(cfg);
}
