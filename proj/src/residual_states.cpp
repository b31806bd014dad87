#include "schreier/detail/residual_states.hpp"

#include <mutex>
#include <optional>

namespace schreier::detail {

std::shared_ptr<ResidualStates> ResidualStates::shared(const Family& root) {
  static std::mutex mutex;
  static std::unordered_map<std::string, std::shared_ptr<ResidualStates>> tables;
  std::string key = root.descriptor();
  std::lock_guard lock(mutex);
  auto& slot = tables[std::move(key)];
  if (!slot) slot = std::make_shared<ResidualStates>(root);
  return slot;
}

int ResidualStates::step(int s, Index m) {
  const auto key = std::make_pair(s, m);
  Family fam = [&] {
    std::shared_lock lock(mutex_);
    return states_[static_cast<std::size_t>(s)];
  }();
  {
    std::shared_lock lock(mutex_);
    if (auto it = transitions_.find(key); it != transitions_.end()) return it->second;
  }
  const FinSet single{m};
  std::optional<Family> next;
  if (fam.contains(single)) next = fam.node().residual(fam, single);
  std::unique_lock lock(mutex_);
  if (auto it = transitions_.find(key); it != transitions_.end()) return it->second;
  const int id = next ? intern(*next) : -1;
  transitions_.emplace(key, id);
  return id;
}

std::size_t ResidualStates::size() const {
  std::shared_lock lock(mutex_);
  return states_.size();
}

// Caller holds the exclusive lock (or is the constructor).
int ResidualStates::intern(const Family& f) {
  std::string d = f.descriptor();
  if (auto it = ids_.find(d); it != ids_.end()) return it->second;
  const int id = static_cast<int>(states_.size());
  states_.push_back(f);
  ids_.emplace(std::move(d), id);
  return id;
}

}  // namespace schreier::detail
