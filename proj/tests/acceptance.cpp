// Runs the full battery and prints one line per acceptance criterion.
// Exit status is 0 iff every criterion holds.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "modvir/battery.hpp"

int main() {
  using modvir::CheckStatus;
  const modvir::VerificationReport report = modvir::run_battery();

  struct Tally {
    int pass = 0;
    int reported = 0;
    std::vector<std::string> failed;
  };
  std::map<int, Tally> by_criterion;
  for (int c = 1; c <= 8; ++c) by_criterion[c];
  for (const auto& check : report.checks) {
    Tally& t = by_criterion[check.criterion];
    switch (check.status) {
      case CheckStatus::Pass: ++t.pass; break;
      case CheckStatus::Reported: ++t.reported; break;
      case CheckStatus::Fail: t.failed.push_back(check.name); break;
    }
  }

  int failures = 0;
  for (const auto& [criterion, t] : by_criterion) {
    const int total = t.pass + t.reported + static_cast<int>(t.failed.size());
    const bool ok = total > 0 && t.failed.empty();
    std::printf("criterion %d: %s (%d/%d checks pass", criterion, ok ? "PASS" : "FAIL",
                t.pass + t.reported, total);
    if (t.reported > 0) std::printf(", %d reported", t.reported);
    std::printf(")");
    for (const auto& name : t.failed) std::printf(" [failed: %s]", name.c_str());
    std::printf("\n");
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
