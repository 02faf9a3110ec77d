#include "skeinlab/json_io.hpp"

#include "skeinlab/braid.hpp"

#include <utility>

namespace skeinlab {

namespace {

Int int_from_json(const nlohmann::json& j) {
    try {
        if (j.is_string()) return Int(j.get<std::string>());
        if (j.is_number_integer()) return Int(j.get<long>());
    } catch (const std::invalid_argument&) {
        // fall through to the format error below
    }
    throw JsonFormatError("coefficient must be a decimal string or integer, got " + j.dump());
}

long exp_from_json(const nlohmann::json& j) {
    if (!j.is_number_integer()) {
        throw JsonFormatError("exponent must be an integer, got " + j.dump());
    }
    return j.get<long>();
}

}  // namespace

nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({e, c.get_str()});
    }
    return {{"var", p.var()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("var") || !j.contains("terms")) {
        throw JsonFormatError("polynomial must be {\"var\":..., \"terms\":[...]}");
    }
    if (!j["var"].is_string()) throw JsonFormatError("\"var\" must be a string");
    if (!j["terms"].is_array()) throw JsonFormatError("\"terms\" must be an array");
    LaurentPoly p{j["var"].get<std::string>()};
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2) {
            throw JsonFormatError("each term must be [exponent, coefficient]");
        }
        p.add_term(exp_from_json(t[0]), int_from_json(t[1]));
    }
    return p;
}

nlohmann::json bipoly_to_json(const BiLaurent& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : p.terms()) {
        terms.push_back({key.first, key.second, c.get_str()});
    }
    return {{"vars", nlohmann::json::array({"v", "z"})}, {"terms", std::move(terms)}};
}

BiLaurent bipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
        throw JsonFormatError("polynomial must be {\"vars\":[...], \"terms\":[...]}");
    }
    const auto& vars = j["vars"];
    if (!vars.is_array() || vars.size() != 2 || vars[0] != "v" || vars[1] != "z") {
        throw JsonFormatError("\"vars\" must be [\"v\",\"z\"]");
    }
    if (!j["terms"].is_array()) throw JsonFormatError("\"terms\" must be an array");
    BiLaurent p;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3) {
            throw JsonFormatError("each term must be [v-exponent, z-exponent, coefficient]");
        }
        p.add_term(exp_from_json(t[0]), exp_from_json(t[1]), int_from_json(t[2]));
    }
    return p;
}

nlohmann::json invariants_json(const BraidWord& b, long kappa_lo, long kappa_hi) {
    const InvariantSet inv = invariants(b);
    nlohmann::json p_arr = nlohmann::json::array();
    nlohmann::json h_arr = nlohmann::json::array();
    for (const auto& pj : inv.decomp.p) p_arr.push_back(poly_to_json(pj));
    for (const auto& hj : inv.decomp.h) h_arr.push_back(poly_to_json(hj));
    return {
        {"word", render_braid(b)},
        {"n", b.n},
        {"w", inv.decomp.w},
        {"mu", component_count(b)},
        {"P", bipoly_to_json(inv.P)},
        {"p", std::move(p_arr)},
        {"h", std::move(h_arr)},
        {"conway", poly_to_json(inv.nabla)},
        {"jones", poly_to_json(inv.jones)},
        {"alexander", poly_to_json(inv.alex)},
        {"checks",
         {{"thm1", low_coeff_forms_check(b)},
          {"thm2", weighted_sum_check(b, kappa_lo, kappa_hi)},
          {"prop10", mirror_stabilization_check(b)}}},
    };
}

}  // namespace skeinlab
