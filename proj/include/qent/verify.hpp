#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qent {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string observed;
  std::string expected;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  // Closed-form checks only (criteria 1-8).
  bool quick = false;
  // Adds the seven-qubit search probe (criterion 11).
  bool include_long = false;
  // Restrict to these criterion ids; empty means all enabled ones.
  std::set<int> only;
  // Directory holding ren4.state, vn7.state and optionally
  // reference_values.txt; the bundled copies are used when unset.
  std::optional<std::filesystem::path> data_dir;
  int threads = 0;
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 11;
inline constexpr int kLongCriterion = 11;

// Runs the enabled criteria in id order. Disabled ones are reported with
// skipped = true.
std::vector<CriterionResult> run_verification(const VerifyOptions& options);

std::string format_criterion_line(const CriterionResult& r);

}  // namespace qent
