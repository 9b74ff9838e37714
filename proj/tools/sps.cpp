#include "sps/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Sums of products of sparse polynomials: identity testing and real-root bounds"};
  app.require_subcommand(1);

  sps::PitOptions pit;
  std::string oracle = "none";
  auto* pit_cmd = app.add_subcommand("pit", "Decide whether the expression is identically zero");
  pit_cmd->add_option("FILE", pit.path, "Expression file")->required();
  pit_cmd->add_option("--oracle", oracle, "Leading-coefficient test")->check(CLI::IsMember({"exact", "none"}));
  pit_cmd->add_option("--kronecker-degree", pit.kronecker_degree, "Degree bound for multivariate input");
  pit_cmd->add_flag("!--no-timings", pit.timings, "Omit timings_ms from the report");

  sps::BoundsOptions bounds;
  std::string exact = "on";
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate real-root upper bounds");
  bounds_cmd->add_option("FILE", bounds.path, "Expression file")->required();
  bounds_cmd->add_option("--exact-sumsets", exact, "Enumerate support sumsets (on|off)")
      ->expected(0, 1)
      ->default_str("on")
      ->check(CLI::IsMember({"on", "off", ""}));
  bounds_cmd->add_flag("!--no-timings", bounds.timings, "Omit timings_ms from the report");

  sps::VerifyOptions verify;
  unsigned pw = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check against expansion-based oracles");
  auto* file_opt = verify_cmd->add_option("FILE", verify.path, "Expression file");
  verify_cmd->add_option("--seed", verify.seed, "Seed for random evaluation");
  verify_cmd->add_option("--max-expand", verify.max_expand, "Expansion cap in monomials");
  auto* pw_opt = verify_cmd->add_option("--pw", pw, "Verify the fixture prod_{i=1}^{2^n} (X - i)");
  pw_opt->excludes(file_opt);
  verify_cmd->add_flag("!--no-timings", verify.timings, "Omit timings_ms from the report");

  CLI11_PARSE(app, argc, argv);

  if (pit_cmd->parsed()) {
    pit.exact_oracle = oracle == "exact";
    return sps::run_pit(pit, std::cout, std::cerr);
  }
  if (bounds_cmd->parsed()) {
    bounds.exact_sumsets = exact != "off";
    return sps::run_bounds(bounds, std::cout, std::cerr);
  }
  if (pw_opt->count() > 0) {
    verify.pw = pw;
  } else if (file_opt->count() == 0) {
    std::cerr << "sps verify: FILE or --pw is required\n";
    return sps::kExitError;
  }
  return sps::run_verify(verify, std::cout, std::cerr);
}
