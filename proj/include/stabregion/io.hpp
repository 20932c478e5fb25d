#pragma once

#include "stabregion/verify.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace stabreg {

using ojson = nlohmann::ordered_json;

// Collection spec: {"k01": int|"inf", "k02": ..., ..., "k23": ...}
HomDegrees collection_from_json(const ojson& j);
HomDegrees load_collection_file(const std::string& path);
ojson collection_to_json(const HomDegrees& k);
ojson bounds_to_json(const Bounds& b);

ojson point_to_json(const Point& x);
Point point_from_strings(const std::vector<std::string>& coords);

ojson witness_to_json(const Witness& w);
ojson verdict_to_json(const RegionVerdict& v);

// `collection_ref` is pasted into replay commands, e.g. "--preset quadric"
// or "--collection spec.json".
ojson report_to_json(const Report& r, const std::string& collection_ref);
std::string report_to_text(const Report& r);

}  // namespace stabreg
