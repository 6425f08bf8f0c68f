#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "coxcert/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Certificates for twisted Coxeter elements and F = q c sigma"};
  app.require_subcommand(1);
  coxcert::RunConfig cfg;

  app.add_subcommand("m-table", "TSV of the constant M for every type of rank <= 8");

  auto* certify = app.add_subcommand("certify", "Good pair, regularity, W^F, exceptional pairs and ledger as JSON");
  certify->add_option("--type", cfg.type, "Type such as E8, 2A4, 3D4")->required();
  certify->add_option("--q", cfg.q, "q values: auto (M+1..M+4) or a comma-separated list");
  certify->add_option("--out", cfg.out, "Write the certificate here instead of stdout");
  certify->add_flag("--force", cfg.force, "Run even when some q <= M");

  auto* cells = app.add_subcommand("verify-cells", "Double-coset classifier over all residues a");
  cells->add_option("--type", cfg.type, "Type such as B3, 2A3")->required();
  cells->add_flag("--exhaustive", cfg.exhaustive, "Require a full sweep over W (|W| <= 10^4)");
  cells->add_option("--seed", cfg.seed, "Seed for the sampled v-list on large groups");
  cells->add_option("--out", cfg.out, "Write the report here instead of stdout");

  auto* oracle = app.add_subcommand("oracle-check", "Compare the cell recursion with finite groups over F2, F3");
  oracle->add_flag("--mutate", cfg.mutate, "Inject a fault into the recursion; the check must then fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? coxcert::kExitOk : coxcert::kExitUsage;
  }

  try {
    if (app.got_subcommand("m-table")) return coxcert::cmd_m_table(std::cout, std::cerr);
    if (app.got_subcommand(certify)) return coxcert::cmd_certify(cfg, std::cout, std::cerr);
    if (app.got_subcommand(cells)) return coxcert::cmd_verify_cells(cfg, std::cout, std::cerr);
    if (app.got_subcommand(oracle)) return coxcert::cmd_oracle_check(cfg, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return coxcert::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return coxcert::kExitFailed;
  }
  return coxcert::kExitUsage;
}
