#pragma once

#include "fixloc/dataset.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace fixloc {

using Json = nlohmann::ordered_json;

// Dataset documents:
//   {"kind":"points","rank":R,"half_dim":N,
//    "points":[{"name":S,"moment":[...],"weights":[[...],...]},...]}
//   {"kind":"components","rank":R,"half_dim":N,
//    "components":[{"name":S,"moment":[...],"weights":[[...],...],
//                   "char_numbers":{"n1,...,ns":"p/q",...}},...]}
// Integers are JSON numbers, or decimal strings when they do not fit in 64
// bits. Moments are not normalized.
Dataset parse_dataset(std::string_view text);
Dataset parse_dataset(const Json& doc);
inline Dataset parse_dataset(const std::string& text) { return parse_dataset(std::string_view(text)); }
inline Dataset parse_dataset(const char* text) { return parse_dataset(std::string_view(text)); }

Json to_json(const FixedPointSet& fps);
Json to_json(const ComponentSet& cs);
Json to_json(const Dataset& d);

// Indented output where flat arrays, arrays of flat arrays and objects with
// only scalar members stay on one line.
std::string pretty_json(const Json& j, int indent = 2);

// indent < 0: single line; otherwise pretty_json.
std::string serialize(const Dataset& d, int indent = -1);

Dataset load_dataset(const std::string& path);

// Integer <-> JSON helpers shared with the report writer.
Json integer_to_json(const Integer& x);
Json vector_to_json(const IntVector& v);
Json rational_to_json(const Rational& r);

} // namespace fixloc
