#pragma once

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "schreier/norm.hpp"

namespace schreier {

/// Persistent memo of norm values, one JSON record per line in
/// `<dir>/norms.jsonl`: {family, c, vec, value, cert_digest}. Records are
/// keyed by the family descriptor, c and the canonical vector text.
class NormCache {
 public:
  /// Loads existing records; creates the directory if needed. Malformed
  /// lines are skipped.
  explicit NormCache(std::filesystem::path dir);

  /// $SCHREIER_CACHE_DIR, if set and non-empty.
  static std::optional<std::filesystem::path> env_dir();

  std::optional<Rational> lookup(const NormParams& params, const SparseVec& x) const;
  /// Cached value, or computes, appends and returns it.
  Rational value(const NormParams& params, const SparseVec& x);

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }
  std::size_t size() const;
  const std::filesystem::path& file() const noexcept { return file_; }

 private:
  static std::string key(const NormParams& params, const SparseVec& x);

  std::filesystem::path file_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Rational> values_;
  std::atomic<std::size_t> hits_{0}, misses_{0};
};

}  // namespace schreier
