#pragma once

#include <string>
#include <vector>

namespace modvir {

enum class CheckStatus { Pass, Fail, Reported };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string group;
  int criterion = 0;
  CheckStatus status = CheckStatus::Fail;
  /// "reference" for published claims, "derived" for independent oracles,
  /// "computed" for values that are reported rather than asserted.
  std::string provenance;
  std::string value;
  long long elapsed_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::size_t failures() const;
};

/// Groups: singular, classification, l2_action, char7, det7, characters,
/// properties, fock, oracle.
std::vector<std::string> battery_groups();

/// Runs the acceptance battery. `only` selects checks by group name, by
/// criterion ("c4"), or by check-name prefix; empty runs everything.
/// Results are sorted by check name.
VerificationReport run_battery(const std::vector<std::string>& only = {});

}  // namespace modvir
