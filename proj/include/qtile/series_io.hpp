#pragma once

#include <string>

#include <json.hpp>

#include "qtile/series.hpp"

namespace qtile {

// JSON shape: {"qmax": N, "terms": [{"q": d, "z": e, "c": "<decimal>"}, ...]}
// with terms sorted by (q, z). Coefficients travel as strings so big values survive.
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

// CSV shape: header "q_deg,z_deg,coeff", one row per nonzero term.
std::string series_to_csv(const Series& s);
/// CSV carries no truncation order, so the caller supplies it.
Series series_from_csv(const std::string& text, std::size_t qmax);

/// Ascending q with z-polynomials grouped, e.g. "1 + z q + (z + z^2) q^3".
std::string series_to_human(const Series& s);

}  // namespace qtile
