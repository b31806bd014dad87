#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace schreier {

struct CheckResult {
  std::string id;
  std::string anchor;
  bool passed = false;
  std::optional<std::string> witness;  // counterexample or reported figure
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // canonical order
  std::int64_t elapsed_ms = 0;

  bool passed() const;
  /// {suite, seed, checks:[{id, anchor, status, witness?}], elapsed_ms}
  nlohmann::json to_json(bool with_timing = true) const;
  /// One `PASS|FAIL id [anchor] witness` line per check.
  std::string to_text() const;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Known suite names.
const std::vector<std::string>& suite_names();

/// Runs "ordinals", "families", "norms", "indices" or "all". Checks run
/// concurrently; results do not depend on scheduling. Throws DomainError for
/// an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace schreier
