// modvir: command-line front end for the Verma/Fock engine.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "modvir/commands.hpp"

namespace {

struct CommandSpec {
  const char* name;
  const char* help;
};

constexpr CommandSpec kCommands[] = {
    {"singvec", "singular vectors of V(c,h) in one degree"},
    {"irrdims", "graded dimensions of the irreducible quotient L(c,h)"},
    {"fock-dims", "graded dimensions of a free-fermion Fock sector"},
    {"vir-span", "dimensions of the Virasoro span of the canonical Fock vector"},
    {"hwvec", "highest-weight vectors in one Fock slice"},
    {"mode-apply", "apply the n-th mode of a vacuum-module state to a Verma vector"},
    {"verify-paper", "run the acceptance battery"},
};

void add_common(CLI::App* sub, modvir::RunConfig& cfg) {
  sub->add_option("--c", cfg.c, "central charge, e.g. 1/2 or '3 mod 7'")->capture_default_str();
  sub->add_option("--h", cfg.h, "highest weight; 'h' keeps it formal (mode-apply)")->capture_default_str();
  sub->add_option("--char", cfg.characteristic, "0 or an odd prime")->capture_default_str();
  sub->add_option("--degree", cfg.degree, "degree of the slice")->check(CLI::NonNegativeNumber);
  sub->add_option("--max", cfg.max, "largest degree in a table")->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_option("--sector", cfg.sector, "NS or R")->capture_default_str();
  sub->add_option("--parity", cfg.parity, "even or odd")->capture_default_str();
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
  sub->add_flag("--compare-char0", cfg.compare_char0, "add the characteristic-0 column (irrdims)");
  sub->add_option("--only", cfg.only, "battery filter: group, cN or check-name prefix (repeatable)");
  sub->add_option("--state", cfg.state, "s, u, or a JSON word such as [-2,-2]")->capture_default_str();
  sub->add_option("--mode", cfg.mode, "mode index n");
  sub->add_option("--target", cfg.target, "JSON Verma vector (default: highest-weight vector)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Virasoro Verma modules, singular vectors and free-fermion realizations"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  modvir::RunConfig cfg;
  for (const auto& spec : kCommands) add_common(app.add_subcommand(spec.name, spec.help), cfg);
  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const modvir::CommandOutput result = modvir::run_command(cfg);
    const std::string text = result.render(cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        std::cerr << "modvir: cannot write " << cfg.out << '\n';
        return 2;
      }
      file << text;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "modvir " << cfg.command << ": " << e.what() << '\n';
    return 2;
  }
}
