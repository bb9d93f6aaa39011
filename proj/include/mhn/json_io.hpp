#pragma once

#include <json.hpp>

#include "mhn/identities.hpp"
#include "mhn/spectral.hpp"

namespace mhn {

/// Rationals serialize as decimal strings so no JSON consumer loses precision.
inline nlohmann::json to_json(const Rational& r) {
    return nlohmann::json{{"num", r.num().to_string()}, {"den", r.den().to_string()}};
}

inline nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json j{{"identity", rep.identity},
                     {"range", rep.range},
                     {"status", rep.verified ? "verified" : "failed"}};
    if (rep.witness) j["witness"] = *rep.witness;
    return j;
}

inline nlohmann::json to_json(const PoleBasisForm& form) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : form.terms) {
        nlohmann::json t{{"k", key}, {"num", c.num().to_string()}, {"den", c.den().to_string()}};
        terms.push_back(std::move(t));
    }
    return nlohmann::json{{"g", form.g}, {"n", form.n}, {"terms", std::move(terms)}};
}

}  // namespace mhn
