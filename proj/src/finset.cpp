#include "schreier/finset.hpp"

#include <algorithm>
#include <cctype>

#include "schreier/errors.hpp"

namespace schreier {

FinSet::FinSet(std::initializer_list<Index> elems) : FinSet(from_unsorted(std::vector<Index>(elems))) {}

FinSet FinSet::from_unsorted(std::vector<Index> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!elems.empty() && elems.front() == 0) throw DomainError("set elements must be positive");
  FinSet s;
  s.elems_ = std::move(elems);
  return s;
}

FinSet FinSet::from_sorted(std::vector<Index> elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == 0) throw DomainError("set elements must be positive");
    if (i > 0 && elems[i] <= elems[i - 1]) throw DomainError("set elements must be strictly increasing");
  }
  FinSet s;
  s.elems_ = std::move(elems);
  return s;
}

FinSet FinSet::interval(Index lo, Index hi) {
  FinSet s;
  for (Index i = std::max<Index>(lo, 1); i <= hi; ++i) s.elems_.push_back(i);
  return s;
}

FinSet FinSet::from_mask(std::uint64_t mask) {
  FinSet s;
  for (Index i = 0; i < 64; ++i)
    if (mask >> i & 1U) s.elems_.push_back(i + 1);
  return s;
}

bool FinSet::contains(Index n) const { return std::binary_search(elems_.begin(), elems_.end(), n); }

bool FinSet::subset_of(const FinSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

FinSet FinSet::with(Index n) const {
  if (n == 0) throw DomainError("set elements must be positive");
  FinSet s = *this;
  auto it = std::lower_bound(s.elems_.begin(), s.elems_.end(), n);
  if (it == s.elems_.end() || *it != n) s.elems_.insert(it, n);
  return s;
}

FinSet FinSet::without(Index n) const {
  FinSet s = *this;
  auto it = std::lower_bound(s.elems_.begin(), s.elems_.end(), n);
  if (it != s.elems_.end() && *it == n) s.elems_.erase(it);
  return s;
}

FinSet FinSet::tail() const {
  FinSet s;
  s.elems_.assign(elems_.begin() + 1, elems_.end());
  return s;
}

FinSet FinSet::prefix(std::size_t k) const {
  FinSet s;
  s.elems_.assign(elems_.begin(), elems_.begin() + static_cast<std::ptrdiff_t>(std::min(k, elems_.size())));
  return s;
}

FinSet FinSet::united(const FinSet& other) const {
  FinSet s;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(s.elems_));
  return s;
}

std::uint64_t FinSet::mask() const {
  std::uint64_t m = 0;
  for (Index e : elems_) {
    if (e > 64) throw DomainError("set element exceeds 64 for bitmask");
    m |= std::uint64_t{1} << (e - 1);
  }
  return m;
}

std::size_t FinSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Index e : elems_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

bool precedes(const FinSet& a, const FinSet& b) {
  return a.empty() || b.empty() || a.max() < b.min();
}

bool precedes(Index n, const FinSet& a) { return a.empty() || n < a.min(); }

bool is_spread(const FinSet& a, const FinSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_successive(std::span<const FinSet> blocks) {
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (!precedes(blocks[i - 1], blocks[i])) return false;
  return true;
}

FinSet parse_finset(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "-" || text.empty()) return {};
  std::vector<Index> elems;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > 0xFFFFFFFFULL) throw ParseError("set element too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a positive integer", pos);
    if (value == 0) throw ParseError("set elements must be positive", start);
    if (!elems.empty() && value <= elems.back()) throw ParseError("set elements must be strictly increasing", start);
    elems.push_back(static_cast<Index>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return FinSet::from_sorted(std::move(elems));
}

std::string to_string(const FinSet& a) {
  if (a.empty()) return "-";
  std::string out;
  for (Index e : a) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

}  // namespace schreier
