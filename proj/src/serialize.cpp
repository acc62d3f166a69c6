#include "slicepoly/serialize.hpp"

#include <cmath>

#include "slicepoly/error.hpp"

namespace slicepoly {

namespace {

nlohmann::json radius_to_json(double r) {
  if (std::isinf(r)) return "inf";
  return r;
}

double radius_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInfiniteRadius;
    throw Error(ErrorCode::Parse, "radius must be a number or \"inf\"");
  }
  if (!v.is_number()) throw Error(ErrorCode::Parse, "radius must be a number or \"inf\"");
  return v.get<double>();
}

Quaternion quaternion_from_json(const nlohmann::json& v) {
  if (!v.is_array() || v.size() != 4) {
    throw Error(ErrorCode::Parse, "a quaternion is an array of four numbers");
  }
  for (const auto& x : v) {
    if (!x.is_number()) throw Error(ErrorCode::Parse, "quaternion components must be numbers");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(), v[3].get<double>()};
}

}  // namespace

nlohmann::json to_json(const PolySliceFunction& f) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : f.components()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Quaternion& a : c.coeffs()) coeffs.push_back({a.x0, a.x1, a.x2, a.x3});
    comps.push_back(std::move(coeffs));
  }
  return {{"order", f.order()}, {"components", std::move(comps)}, {"radius", radius_to_json(f.radius())}};
}

nlohmann::json to_json(const RegularSeries& s) { return to_json(PolySliceFunction({s})); }

PolySliceFunction poly_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("components")) {
    throw Error(ErrorCode::Parse, "expected an object with \"order\" and \"components\"");
  }
  if (!doc["order"].is_number_integer()) throw Error(ErrorCode::Parse, "order must be an integer");
  const int order = doc["order"].get<int>();
  const auto& comps = doc["components"];
  if (!comps.is_array() || static_cast<int>(comps.size()) != order || order < 1) {
    throw Error(ErrorCode::Parse, "components must be an array of length order >= 1");
  }
  const double radius = doc.contains("radius") ? radius_from_json(doc["radius"]) : kInfiniteRadius;
  std::vector<RegularSeries> out;
  for (const auto& c : comps) {
    if (!c.is_array()) throw Error(ErrorCode::Parse, "each component is an array of quaternions");
    std::vector<Quaternion> coeffs;
    for (const auto& a : c) coeffs.push_back(quaternion_from_json(a));
    out.emplace_back(std::move(coeffs), radius);
  }
  return PolySliceFunction(std::move(out));
}

RegularSeries series_from_json(const nlohmann::json& doc) {
  PolySliceFunction f = poly_from_json(doc);
  if (f.order() != 1) throw Error(ErrorCode::Parse, "a regular series has order 1");
  return f.component(0);
}

std::string dump_json(const PolySliceFunction& f) { return to_json(f).dump(); }

PolySliceFunction parse_poly_json(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw Error(ErrorCode::Parse, "invalid JSON");
  return poly_from_json(doc);
}

}  // namespace slicepoly
