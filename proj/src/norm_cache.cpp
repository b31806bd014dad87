#include "schreier/norm_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>

#include "schreier/errors.hpp"
#include "schreier/json_io.hpp"

namespace schreier {

NormCache::NormCache(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  file_ = dir / "norms.jsonl";
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      const std::string k = j.at("family").get<std::string>() + "@" + j.at("c").get<std::string>() + "#" +
                            j.at("vec").get<std::string>();
      values_[k] = parse_rational(j.at("value").get<std::string>());
    } catch (const std::exception&) {
      continue;
    }
  }
}

std::optional<std::filesystem::path> NormCache::env_dir() {
  const char* dir = std::getenv("SCHREIER_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir);
}

std::string NormCache::key(const NormParams& params, const SparseVec& x) {
  return params.key() + "#" + to_string(x);
}

std::optional<Rational> NormCache::lookup(const NormParams& params, const SparseVec& x) const {
  std::shared_lock lock(mutex_);
  if (auto it = values_.find(key(params, x)); it != values_.end()) return it->second;
  return std::nullopt;
}

Rational NormCache::value(const NormParams& params, const SparseVec& x) {
  const std::string k = key(params, x);
  {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(k); it != values_.end()) {
      ++hits_;
      return it->second;
    }
  }
  const NormResult r = norm(params, x);
  Json record{{"family", params.family.descriptor()},
              {"c", to_string(params.c)},
              {"vec", to_string(x)},
              {"value", to_string(r.value)},
              {"cert_digest", cert_digest(r.cert)}};
  std::unique_lock lock(mutex_);
  ++misses_;
  if (values_.emplace(k, r.value).second) {
    std::ofstream out(file_, std::ios::app);
    out << record.dump() << '\n';
  }
  return r.value;
}

std::size_t NormCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

}  // namespace schreier
