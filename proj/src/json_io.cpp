#include "schreier/json_io.hpp"

#include <cstdio>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

FinSet finset_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of indices", 0);
  std::vector<Index> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() || e.get<std::uint64_t>() == 0) throw ParseError("indices must be positive integers", 0);
    out.push_back(e.get<Index>());
  }
  return FinSet::from_unsorted(std::move(out));
}

}  // namespace

Json cert_to_json(const CertNode& cert) {
  Json j;
  j["block"] = Json(std::vector<Index>(cert.block.begin(), cert.block.end()));
  j["anchor"] = cert.anchor;
  j["value"] = to_string(cert.value);
  if (cert.leaf) j["leaf"] = *cert.leaf;
  Json children = Json::array();
  for (const auto& ch : cert.children) children.push_back(cert_to_json(ch));
  j["children"] = std::move(children);
  return j;
}

CertNode cert_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("certificate node must be an object", 0);
  CertNode node;
  try {
    node.block = finset_from_json(j.at("block"));
    node.anchor = j.at("anchor").get<Index>();
    node.value = parse_rational(j.at("value").get<std::string>());
    if (j.contains("leaf")) node.leaf = j.at("leaf").get<Index>();
    for (const auto& ch : j.at("children")) node.children.push_back(cert_from_json(ch));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
  return node;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string cert_digest(const CertNode& cert) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(cert_to_json(cert).dump())));
  return buf;
}

Family family_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("explicit family must be an array of arrays", 0);
  std::vector<FinSet> sets;
  for (const auto& s : j) sets.push_back(finset_from_json(s));
  return Family::explicit_sets(sets, true);
}

}  // namespace schreier
