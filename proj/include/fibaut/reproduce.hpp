// End-to-end reproduction suite: builds the catalog, synthesizes the studied
// sequences, runs the verification scripts and the numeric cross-checks.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibaut/builtins.hpp"
#include "fibaut/synth.hpp"

namespace fibaut {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;
};

struct SequenceInfo {
  std::string name;
  std::size_t states = 0;
  bool from_store = false;
  std::optional<SynthesisReport> report;
};

struct ScriptBlock {
  std::string label;
  std::string text;
};

/// The verification scripts, in order.
const std::vector<ScriptBlock>& paper_scripts();

class Reproduction {
 public:
  /// `seed` picks the transition mutated in the permutation check.
  explicit Reproduction(BuildOptions opts = {}, std::uint64_t seed = 1);

  /// Builtins plus a105774, p0, p1, p2, a368200 and aprime.
  Catalog& catalog();
  const std::vector<SequenceInfo>& sequences();

  /// Runs the checks for the listed criteria (all of 1..11 if empty).
  std::vector<CheckResult> run(const std::vector<int>& criteria = {},
                               const std::function<void(const CheckResult&)>& progress = {});

 private:
  Automaton sequence(const std::string& name, std::function<std::vector<std::uint64_t>(std::size_t)> table,
                     const Certificate& certificate);
  void run_scripts(std::vector<CheckResult>& out, const std::function<void(const CheckResult&)>& progress);

  BuildOptions opts_;
  std::uint64_t seed_;
  std::optional<Catalog> catalog_;
  std::vector<SequenceInfo> sequences_;
  Catalog script_catalog_;
  bool scripts_done_ = false;
};

}  // namespace fibaut
