#pragma once

/**
 * @file serialize.hpp
 * @brief JSON form of series data:
 *
 *   {"order": N,
 *    "components": [[[x0, x1, x2, x3], ...], ...],
 *    "radius": number | "inf"}
 *
 * components[k][n] is the right coefficient of conj(q)^k q^n.  A single
 * RegularSeries is written with order 1.
 */

#include <string>
#include <string_view>

#include <json.hpp>

#include "slicepoly/slice_poly.hpp"

namespace slicepoly {

nlohmann::json to_json(const PolySliceFunction& f);
nlohmann::json to_json(const RegularSeries& s);

/// Throws Error(Parse) on a malformed document.
PolySliceFunction poly_from_json(const nlohmann::json& doc);
RegularSeries series_from_json(const nlohmann::json& doc);

std::string dump_json(const PolySliceFunction& f);
PolySliceFunction parse_poly_json(std::string_view text);

}  // namespace slicepoly
