#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qgen/poly_q.hpp"
#include "qgen/poly_x.hpp"
#include "qgen/rat.hpp"
#include "qgen/rat_fn.hpp"

namespace qgen {

// Plain text: ascending powers, e.g. "1-2*q+q^2" and "(-q)/(1+q^2)".
std::string to_plain(const Rat& r);
std::string to_plain(const PolyQ& p, std::string_view var = "q");
std::string to_plain(const RatFn& f);
std::string to_plain(const PolyX& p);

std::string to_latex(const Rat& r);
std::string to_latex(const PolyQ& p, std::string_view var = "q");
std::string to_latex(const RatFn& f);
std::string to_latex(const PolyX& p);

/// Exact "num/den" string; the denominator is always written.
std::string rat_json_string(const Rat& r);
nlohmann::json to_json(const PolyQ& p);
/// {"num": [...], "den": [...]} with "num/den" coefficient strings.
nlohmann::json to_json(const RatFn& f);
/// {"coefficients": [RatFn json, ...]} indexed by power of X.
nlohmann::json to_json(const PolyX& p);

PolyQ polyq_from_json(const nlohmann::json& j);
RatFn ratfn_from_json(const nlohmann::json& j);
PolyX polyx_from_json(const nlohmann::json& j);

/// Parses a rational expression in q built from integers, q, + - * / ^ and
/// parentheses. Accepts everything to_plain emits for Rat, PolyQ and RatFn.
/// Throws std::invalid_argument on malformed input.
RatFn parse_ratfn(std::string_view text);
/// As parse_ratfn, but the result must be a polynomial.
PolyQ parse_polyq(std::string_view text);

}  // namespace qgen
