#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "isw/commands.hpp"

namespace {

using isw::cli::Format;
using isw::cli::Report;
using isw::cli::RunConfig;

void add_common_options(CLI::App* sub, RunConfig& cfg, std::string& sign,
                        std::string& format) {
  sub->add_option("--n", cfg.n, "maximum occupation per state (>= 1)");
  sub->add_option("--g", cfg.g, "closure circles (>= 1)");
  sub->add_option("--sign", sign, "commutation branch")->check(CLI::IsMember({"+", "-"}));
  sub->add_option("--seed", cfg.seed, "random seed for the triple sweeps");
  sub->add_option("--trials", cfg.trials, "random triples per dimension");
  sub->add_option("--steps", cfg.steps, "loop quadrature steps (>= 16)");
  sub->add_option("--tol", cfg.tol, "residual tolerance")->envname("ISW_TOL");
  sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--folded-n", cfg.use_folded_number_operator,
                "drive the loop with the arccos-reconstructed number operator");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for the winding <-> occupation statistics transformation"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string sign = "+";
  std::string format = "json";

  struct Entry {
    const char* name;
    const char* help;
    Report (*run)(const RunConfig&);
  };
  const Entry entries[] = {
      {"map", "winding <-> occupation labels and exchange phases", isw::cli::cmd_map},
      {"fock", "ladder operators, brackets, B and number operators", isw::cli::cmd_fock},
      {"jacobi", "six-term bracket identities over random triples", isw::cli::cmd_jacobi},
      {"coherent", "nilpotent coherent state and its residuals", isw::cli::cmd_coherent},
      {"berry", "loop phases per level and the winding restriction", isw::cli::cmd_berry},
      {"verify-all", "every identity residual over n = 1..16", isw::cli::cmd_verify_all},
  };
  for (const Entry& e : entries)
    add_common_options(app.add_subcommand(e.name, e.help), cfg, sign, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.sign = sign == "+" ? isw::grassmann::Sign::plus : isw::grassmann::Sign::minus;
  cfg.format = format == "json" ? Format::json : Format::csv;

  try {
    for (const Entry& e : entries) {
      if (app.got_subcommand(e.name)) {
        Report rep = e.run(cfg);
        std::fputs(rep.render().c_str(), stdout);
        return rep.passed ? 0 : 1;
      }
    }
    std::fputs("error: no subcommand\n", stderr);
    return 2;
  } catch (const isw::cli::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
