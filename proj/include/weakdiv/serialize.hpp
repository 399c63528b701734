#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "weakdiv/polynomial.hpp"

namespace weakdiv {

using Json = nlohmann::ordered_json;

/// Always "num/den", also for integers.
std::string rational_to_string(const Rational& q);
/// Accepts "num/den" or "num"; the result is in lowest terms.
Rational parse_rational(std::string_view text);

/// {"m": conductor, "c": ["num/den", ...]}
Json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

/// {"coeffs": [ExactScalar, ...]}, lowest degree first.
Json to_json(const Poly& f);
Poly poly_from_json(const Json& j);

/// Bare coefficient list used inside stream records.
Json coeffs_to_json(const Poly& f);
/// Each entry may be an ExactScalar object, a list of rational strings over
/// `conductor`, a rational string, or an integer.
Poly coeffs_from_json(const Json& arr, unsigned conductor);

}  // namespace weakdiv
