#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "kisin/hodge.hpp"
#include "kisin/module.hpp"

namespace kisin {

using Json = nlohmann::json;

// Schemas are documented in the repository README.  All parsers throw
// ParseError naming the offending path.

FieldPtr parse_field(const Json& j, const std::string& path = "field");

// {"field":{...},"var":"u","precision":N,"entries":[[ [exp,[coeffs]] ... ]]}
// precision_override, when set, replaces the declared precision.
SeriesMatrix parse_matrix(const Json& j, std::optional<int> precision_override = {});
SeriesMatrix parse_entries(const Json& entries, const FieldPtr& field, const std::string& var,
                           int prec, const std::string& path);

KisinModuleDD parse_module(const Json& j, std::optional<int> precision_override = {});

HodgeInput parse_hodge(const Json& j);

Json matrix_to_json(const SeriesMatrix& m);
Json window_to_json(const AffinePermutation& w);

// "1,0|2,0" -> per-embedding groups split on '|', cocharacters on ';',
// entries on ','.
std::vector<std::vector<Cochar>> parse_mu_string(const std::string& text, int f, int e_K);
Cochar parse_int_list(const std::string& text);
std::vector<int> parse_blocks_string(const std::string& text, int n);

} // namespace kisin
