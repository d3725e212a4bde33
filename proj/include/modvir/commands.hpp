#pragma once

#include <string>
#include <vector>

#include "modvir/serialize.hpp"

namespace modvir {

struct RunConfig {
  std::string command;
  std::string c = "1/2";
  std::string h = "0";
  long long characteristic = 0;
  int degree = -1;
  int max = 8;
  std::string sector = "NS";
  std::string parity = "even";
  std::string format = "json";
  std::string out;
  bool compare_char0 = false;
  std::vector<std::string> only;
  /// mode-apply: "s", "u", or a JSON array of negative modes such as "[-2,-2]".
  std::string state = "s";
  int mode = 0;
  /// mode-apply: JSON Verma vector; empty means the highest-weight vector.
  std::string target;
};

struct CommandOutput {
  Json json;
  std::string csv;
  std::string pretty;
  /// 0 unless a verification check failed.
  int exit_code = 0;

  std::string render(const std::string& format) const;
};

/// Throws std::invalid_argument (or a coeffring error) on bad input.
CommandOutput cmd_singvec(const RunConfig& cfg);
CommandOutput cmd_irrdims(const RunConfig& cfg);
CommandOutput cmd_fock_dims(const RunConfig& cfg);
CommandOutput cmd_vir_span(const RunConfig& cfg);
CommandOutput cmd_hwvec(const RunConfig& cfg);
CommandOutput cmd_mode_apply(const RunConfig& cfg);
CommandOutput cmd_verify_paper(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandOutput run_command(const RunConfig& cfg);

}  // namespace modvir
