#pragma once
// Text and JSON forms of QtPoly and MacPoly.
//
// QtPoly text: terms "c*q^i*t^j" joined by " + " / " - ", exponents may be negative.
// MacPoly JSON: {"nvars": N, "terms": [{"x": [e1..eN], "num": "<QtPoly>", "den": "<QtPoly>"}]}
// with terms in ascending exponent order and num/den reduced.

#include <string>

#include <nlohmann/json.hpp>

#include "macdo/ybgraph.hpp"

namespace macdo {

QtPoly parse_qtpoly(const std::string& s);
nlohmann::json macpoly_json(const MacPoly& p);
MacPoly macpoly_from_json(const nlohmann::json& j);

}  // namespace macdo
