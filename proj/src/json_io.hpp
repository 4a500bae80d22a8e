#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bounds.hpp"
#include "conditions.hpp"
#include "generate.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "search.hpp"

namespace rootdisk {

using json = nlohmann::json;

/// File-system failure (missing/unreadable path), as opposed to bad content.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {"coeffs": [[re, im], ...]} ascending by power.
json polynomial_to_json(const Polynomial& p);

/// Accepts [[re, im], ...] entries or the real-only shorthand [re, ...].
/// Throws std::invalid_argument on malformed input.
Polynomial polynomial_from_json(const json& j);

/// Parses JSON text in the polynomial format above.
Polynomial parse_polynomial(const std::string& text);

/// Parses inline "re,im;re,im;..." (a bare "re" segment means imaginary 0).
Polynomial parse_inline_coeffs(const std::string& text);

/// Reads and parses a polynomial file. Throws IoError if unreadable.
Polynomial load_polynomial(const std::string& path);

/// {theorem, ok, t1, t2, k, m, alpha, beta, violations}. A missing split
/// index serializes as k = -1; a missing m as null; no wedge as
/// alpha = beta = 0.
json hypothesis_to_json(const HypothesisReport& rep);

/// {theorem, t1, t2, k, m, alpha, beta, center: [re, im], radius,
/// enclosing, ok} with the same missing-value conventions.
json bound_to_json(const BoundReport& rep);

/// {roots: [[re, im], ...], residuals: [...], converged}.
json roots_to_json(const RootSet& roots);

/// {best: BoundReport|null, evaluations, feasible_fraction}.
json search_result_to_json(const SearchResult& result);

json search_config_to_json(const SearchConfig& cfg);

/// Missing keys keep their defaults; unknown keys are an error.
SearchConfig search_config_from_json(const json& j);

/// Reads a config file. Throws IoError if unreadable, invalid_argument on
/// bad content.
SearchConfig load_search_config(const std::string& path);

/// {n, k, m, t1, t2, alpha, seed} with m as int|null.
json gen_spec_to_json(const GenSpec& spec);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

}  // namespace rootdisk
