#include <iostream>

#include <CLI11.hpp>

#include "virtlink/cli/run.hpp"

using virtlink::cli::Format;
using virtlink::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Generalized Alexander polynomial and state-sum invariants of virtual links"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool json = false;
  app.add_flag("--json", json, "Shorthand for --format json");
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto file_command = [&](const char* name, const char* help, std::size_t count = 1) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.inputs, "Input file (.gauss or .morse)")->required()->expected(static_cast<int>(count));
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };

  file_command("gpoly", "Generalized Alexander polynomial G(s,t)");
  file_command("wpoly", "State-sum value W(sigma,tau)");
  file_command("zpoly", "Normalized state sum after sigma^2 = s, tau^-2 = t");
  file_command("states", "List the contributing loop states");
  file_command("compare", "Compare Z and G");
  file_command("skein", "Check W(K+) - W(K-) = z W(K0)", 3);
  file_command("minors", "Elementary minors of the relation matrix")
      ->add_option("--k", cfg.k, "Minor size")
      ->check(CLI::PositiveNumber);

  CLI::App* bq = app.add_subcommand("biquandle-check", "Verify the biquandle axioms for the Alexander biquandle on Z_p");
  bq->add_option("--p", cfg.p, "Prime modulus")->required();
  bq->add_option("--s", cfg.s, "Unit s mod p")->required();
  bq->add_option("--t", cfg.t, "Unit t mod p")->required();
  bq->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* ax = app.add_subcommand("axioms", "Oriented and bi-oriented quantum algebra conditions");
  ax->add_option("--instance", cfg.instance, "Built-in instance (standard)");
  ax->add_option("--rho", cfg.rho_file, "Grid file for rho");
  ax->add_option("--gamma", cfg.gamma_file, "Grid file for gamma");
  ax->add_option("--u", cfg.u, "Automorphism U (T or identity)");
  ax->add_option("--d", cfg.d, "Automorphism D (T or identity)");
  ax->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* corpus = app.add_subcommand("corpus", "Check every diagram of a corpus directory");
  corpus->add_option("dir", cfg.inputs, "Corpus directory")->expected(0, 1);
  corpus->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : virtlink::cli::kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = json || format == "json" ? Format::Json : Format::Text;
  return virtlink::cli::run(cfg, std::cout, std::cerr);
}
