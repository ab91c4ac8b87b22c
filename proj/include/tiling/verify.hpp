#pragma once

#include <string>
#include <vector>

#include "tiling/rule.hpp"

namespace tiling {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyOptions {
  int max_cycle = 2;     // fixed-point pool: rooted pure cycles up to this length
  int patch_depth = 4;   // nesting and collar checks
  int oracle_depth = 6;
};

// Runs the invariant suite over one rule. Never throws for rule-level
// failures; each is reported as a failed check.
std::vector<CheckResult> verify_rule(const SubstitutionRule& rule, const VerifyOptions& opt = {});

// {"rule": .., "ok": .., "checks": [{"name", "ok", "detail"}]}
std::string verify_report_json(const std::string& rule_name, const std::vector<CheckResult>& checks);

}  // namespace tiling
