#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schreier/family.hpp"

namespace schreier::detail {

// Residual families of the minima chosen so far, deduplicated by descriptor.
// Thread safe: lookups share a lock, new states are inserted exclusively.
class ResidualStates {
 public:
  explicit ResidualStates(const Family& root) { root_ = intern(root); }

  /// Process-wide table for the family with this descriptor.
  static std::shared_ptr<ResidualStates> shared(const Family& root);

  int root() const { return root_; }

  /// State after choosing m from state s, or -1 if {m} is not allowed there.
  int step(int s, Index m);

  std::size_t size() const;

 private:
  int intern(const Family& f);

  mutable std::shared_mutex mutex_;
  std::vector<Family> states_;
  std::unordered_map<std::string, int> ids_;
  std::map<std::pair<int, Index>, int> transitions_;
  int root_ = 0;
};

}  // namespace schreier::detail
