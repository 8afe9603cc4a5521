#pragma once

// Stable JSON form of a Certificate. Field order is fixed; rationals are
// [numerator, denominator] pairs; polynomial coefficients are a_0..a_g.

#include <string>

#include "json.hpp"
#include "lenscert/certify.hpp"

namespace lenscert {

using Json = nlohmann::ordered_json;

Json certificate_to_json(const Certificate& cert);

/// Inverse of certificate_to_json. Throws nlohmann::json::exception or std::invalid_argument
/// on malformed input.
Certificate certificate_from_json(const Json& j);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace lenscert
