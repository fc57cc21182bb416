#pragma once

#include <string>

#include "zhu/engine.hpp"

namespace zhu {

// JSON form:
// {"presentation": "heisenberg", "level": 1, "target": "<element>",
//  "combination": [{"kind": "circle", "u": "<word>", "v": "<word>",
//                   "m": 0, "k": 0, "coefficient": "<scalar>"}, ...]}
std::string certificate_to_json(const MembershipCertificate& cert, const Presentation& p, int level);

struct LoadedCertificate {
    const Presentation* presentation = nullptr;
    int level = 0;
    MembershipCertificate certificate;
};

// Throws std::invalid_argument (or ParseError) on malformed input.
LoadedCertificate certificate_from_json(const std::string& text);

// Loads and rechecks; true when the combination sums to the target exactly.
bool recheck_certificate_json(const std::string& text);

}  // namespace zhu
