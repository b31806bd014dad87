#include "schreier/sparse_vec.hpp"

#include <cstdlib>

#include "schreier/errors.hpp"

namespace schreier {

SparseVec SparseVec::unit(Index i) {
  SparseVec v;
  v.set(i, Rational(1));
  return v;
}

SparseVec SparseVec::from_entries(const std::map<Index, Rational>& entries) {
  SparseVec v;
  for (const auto& [i, q] : entries) v.set(i, q);
  return v;
}

Rational SparseVec::operator[](Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVec::set(Index i, const Rational& value) {
  if (i == 0) throw DomainError("vector indices start at 1");
  Rational v = value;
  v.canonicalize();
  if (v == 0)
    entries_.erase(i);
  else
    entries_[i] = std::move(v);
}

FinSet SparseVec::support() const {
  std::vector<Index> idx;
  idx.reserve(entries_.size());
  for (const auto& [i, _] : entries_) idx.push_back(i);
  return FinSet::from_sorted(std::move(idx));
}

Rational SparseVec::sup_norm() const {
  Rational m(0);
  for (const auto& [_, q] : entries_)
    if (abs(q) > m) m = abs(q);
  return m;
}

Rational SparseVec::l1_norm() const {
  Rational s(0);
  for (const auto& [_, q] : entries_) s += abs(q);
  return s;
}

SparseVec SparseVec::project(const FinSet& a) const {
  SparseVec v;
  for (const auto& [i, q] : entries_)
    if (a.contains(i)) v.entries_.emplace(i, q);
  return v;
}

SparseVec SparseVec::operator+(const SparseVec& other) const {
  SparseVec v = *this;
  for (const auto& [i, q] : other.entries_) v.set(i, v[i] + q);
  return v;
}

SparseVec SparseVec::operator-() const { return scaled(Rational(-1)); }

SparseVec SparseVec::scaled(const Rational& s) const {
  SparseVec v;
  if (s == 0) return v;
  for (const auto& [i, q] : entries_) v.entries_.emplace(i, q * s);
  return v;
}

Rational dot(const SparseVec& f, const SparseVec& x) {
  Rational s(0);
  const auto& small = f.support_size() <= x.support_size() ? f : x;
  const auto& large = f.support_size() <= x.support_size() ? x : f;
  for (const auto& [i, q] : small.entries()) s += q * large[i];
  return s;
}

SparseVec parse_sparse_vec(std::string_view text) {
  SparseVec v;
  if (text.empty() || text == "0") return v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'index:value'", pos);
    const std::string idx_text(item.substr(0, colon));
    char* stop = nullptr;
    const unsigned long idx = std::strtoul(idx_text.c_str(), &stop, 10);
    if (idx_text.empty() || *stop != '\0' || idx == 0 || idx > 0xFFFFFFFFUL)
      throw ParseError("bad vector index '" + idx_text + "'", pos);
    Rational value;
    try {
      value = parse_rational(item.substr(colon + 1));
    } catch (const ParseError& e) {
      throw ParseError("bad coefficient in '" + std::string(item) + "'", pos + colon + 1 + e.position());
    }
    if (v[static_cast<Index>(idx)] != 0) throw ParseError("duplicate index " + idx_text, pos);
    v.set(static_cast<Index>(idx), value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return v;
}

std::string to_string(const SparseVec& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [i, q] : x.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ":" + to_string(q);
  }
  return out;
}

}  // namespace schreier
