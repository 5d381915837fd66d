// aekahler: curvature, mass and Monge-Ampere computations for radial Kahler
// metrics on C^2.
//
// Exit codes: 0 ok, 1 numerical failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "aekahler/errors.hpp"
#include "aekahler/format.hpp"
#include "commands.hpp"

namespace {

using Runner = std::function<void(const aek::cli::RunConfig&, std::ostream&)>;

void add_source_flags(CLI::App* cmd, aek::cli::RunConfig& cfg) {
  cmd->add_option("--family", cfg.family,
                  "euclidean, burns-log, burns-log-prime or volume");
  cmd->add_option("--profile", cfg.profile, "profile JSON file")->check(CLI::ExistingFile);
  cmd->add_option("--lambda", cfg.lambda, "family parameter")->check(CLI::PositiveNumber);
}

void add_common_flags(CLI::App* cmd, aek::cli::RunConfig& cfg) {
  cmd->add_option("--out", cfg.out, "output file (default stdout)");
  cmd->add_option_function<std::string>(
         "--format",
         [&cfg](const std::string& f) {
           cfg.format = f == "json" ? aek::cli::Format::json : aek::cli::Format::csv;
         },
         "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option_function<double>(
         "--rtol", [&cfg](double v) { cfg.rtol = v; }, "relative quadrature tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option_function<double>(
         "--atol", [&cfg](double v) { cfg.atol = v; }, "absolute quadrature tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--serial", cfg.serial, "use the serial reference kernels");
}

// The library reads its default tolerances from the environment, so flags
// are forwarded there.
void apply_tolerances(const aek::cli::RunConfig& cfg) {
  if (cfg.rtol) setenv("AEKAHLER_RTOL", aek::fmt17(*cfg.rtol).c_str(), 1);
  if (cfg.atol) setenv("AEKAHLER_ATOL", aek::fmt17(*cfg.atol).c_str(), 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial Kahler metrics on C^2: curvature, mass, Monge-Ampere"};
  app.require_subcommand(1);
  aek::cli::RunConfig cfg;
  std::map<CLI::App*, Runner> runners;

  auto* curv = app.add_subcommand("curvature", "Ricci eigenvalues and scalar curvature on a radial grid");
  add_source_flags(curv, cfg);
  curv->add_option("--r", cfg.r_grid, "radii as lo:hi:N or lo:hi:Nlog");
  add_common_flags(curv, cfg);
  runners[curv] = aek::cli::cmd_curvature;

  auto* mass = app.add_subcommand("mass", "ADM mass, scalar-curvature mass and inequality report");
  add_source_flags(mass, cfg);
  add_common_flags(mass, cfg);
  runners[mass] = aek::cli::cmd_mass;

  auto* sweep = app.add_subcommand("sweep", "family report over several lambdas");
  sweep->add_option("--family", cfg.family, "burns-log, burns-log-prime or volume")->required();
  sweep->add_option("--lambdas", cfg.lambdas, "comma-separated lambdas");
  add_common_flags(sweep, cfg);
  runners[sweep] = aek::cli::cmd_sweep;

  auto* ma = app.add_subcommand("ma-solve", "solve the radial Monge-Ampere equation for a density");
  ma->add_option("--density", cfg.density, "density JSON file")->required()->check(CLI::ExistingFile);
  auto* ma_lambda = ma->add_option("--lambda", cfg.lambda, "sets the density parameter lambda")
                        ->check(CLI::PositiveNumber);
  add_common_flags(ma, cfg);
  runners[ma] = aek::cli::cmd_ma_solve;

  auto* verify = app.add_subcommand("verify-inequality", "mass inequality slack only");
  add_source_flags(verify, cfg);
  add_common_flags(verify, cfg);
  runners[verify] = aek::cli::cmd_verify_inequality;

  auto* decay = app.add_subcommand("decay", "fit the asymptotic decay rate of g - delta");
  add_source_flags(decay, cfg);
  add_common_flags(decay, cfg);
  runners[decay] = aek::cli::cmd_decay;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.lambda_given = ma_lambda->count() > 0;

  try {
    apply_tolerances(cfg);
    for (auto& [cmd, run] : runners) {
      if (!cmd->parsed()) continue;
      // Buffer so that a failure leaves no partial output file behind.
      std::ostringstream buffer;
      run(cfg, buffer);
      if (cfg.out.empty()) {
        std::cout << buffer.str();
      } else {
        std::ofstream file(cfg.out);
        if (!file) throw aek::UsageError("cannot write '" + cfg.out + "'");
        file << buffer.str();
      }
    }
  } catch (const aek::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const aek::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
