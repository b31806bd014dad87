#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "schreier/family.hpp"
#include "schreier/norm.hpp"

namespace schreier {

using Json = nlohmann::json;

/// {"block":[...], "anchor":n, "value":"p/q", "leaf":i?, "children":[...]}
Json cert_to_json(const CertNode& cert);
/// Throws ParseError on malformed input.
CertNode cert_from_json(const Json& j);

/// 64-bit FNV-1a of the compact certificate text, as 16 hex digits.
std::string cert_digest(const CertNode& cert);
std::uint64_t fnv1a(std::string_view text);

/// Array of arrays of positive integers; the result is closed downward.
Family family_from_json(const Json& j);

}  // namespace schreier
