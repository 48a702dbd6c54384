#pragma once

#include <string>

#include "json.hpp"

#include "kchar/rational_char.hpp"

namespace kchar {
namespace emit {

using nlohmann::json;

// {"numerator": [[exp, "num/den"], ...], "denominator_factors": [d, ...]}
json closed_form_json(const RationalChar& r);

RationalChar parse_closed_form(const json& j);

// {"module": ..., "order": N, "coeffs": [[i, "c"], ...], "closed_form": ...}
json character_payload(json module_desc, const RationalChar& closed, long long order);

// header "exponent,multiplicity", one row per exponent up to the order
std::string character_csv(const KCharacter& k);

std::string character_text(const json& payload);

}  // namespace emit
}  // namespace kchar
