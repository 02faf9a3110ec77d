/**
 * @file json_io.hpp
 * @brief JSON wire format for polynomials and the full invariant report.
 *
 * One-variable polynomials serialize as
 *     {"var":"z","terms":[[exp,"coeff"],...]}
 * with terms in ascending exponent order, and two-variable polynomials as
 *     {"vars":["v","z"],"terms":[[vexp,zexp,"coeff"],...]}
 * with terms in lexicographic (v,z) order.  Coefficients travel as decimal
 * strings so arbitrary-precision values survive every JSON implementation.
 */
#pragma once

#include "skeinlab/algebra.hpp"
#include "skeinlab/coeffs.hpp"

#include "json.hpp"

#include <string>

namespace skeinlab {

/// Thrown when a JSON document does not match the polynomial wire format.
struct JsonFormatError : std::runtime_error {
    explicit JsonFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// {"var":..., "terms":[[exp,"coeff"],...]} in ascending exponent order.
nlohmann::json poly_to_json(const LaurentPoly& p);

/// Inverse of poly_to_json; accepts coefficients as decimal strings or
/// JSON integers.  Throws JsonFormatError on malformed input.
LaurentPoly poly_from_json(const nlohmann::json& j);

/// {"vars":["v","z"],"terms":[[vexp,zexp,"coeff"],...]} lexicographic.
nlohmann::json bipoly_to_json(const BiLaurent& p);

/// Inverse of bipoly_to_json.  Throws JsonFormatError on malformed input.
BiLaurent bipoly_from_json(const nlohmann::json& j);

/**
 * @brief Full invariant report for one braid word.
 *
 * Keys: word, n, w, mu, P, p (array), h (array), conway, jones, alexander,
 * and checks:{thm1,thm2,prop10} where thm1 covers the p_0/p_1/p_2 closed
 * forms, thm2 the weighted-sum family over kappa in [kappa_lo, kappa_hi],
 * and prop10 the mirror/stabilization coefficient relations.
 */
nlohmann::json invariants_json(const BraidWord& b, long kappa_lo = -6, long kappa_hi = 6);

}  // namespace skeinlab
