// Python bindings. Structured values cross the boundary as JSON strings;
// the package wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabregion/io.hpp"

namespace py = pybind11;
using namespace stabreg;

namespace {

Bounds bounds_from_spec(const std::string& collection_json) {
    return derive_bounds(collection_from_json(ojson::parse(collection_json)));
}

std::string classify_json(const std::string& collection_json,
                          const std::vector<std::string>& coords) {
    const Bounds b = bounds_from_spec(collection_json);
    return verdict_to_json(classify(b, point_from_strings(coords))).dump();
}

std::string bounds_json(const std::string& collection_json) {
    return bounds_to_json(bounds_from_spec(collection_json)).dump();
}

std::string preset_quadric_json() { return collection_to_json(preset_quadric()).dump(); }

std::string relation_profile_json(const std::vector<std::string>& coords) {
    const RelationProfile p = relation_profile(point_from_strings(coords));
    return ojson::array({p.a12, p.a13, p.a23}).dump();
}

std::string candidate_shifts_json(const std::vector<std::string>& coords) {
    ojson arr = ojson::array();
    for (const ShiftVector& p : candidate_shifts(point_from_strings(coords))) {
        arr.push_back(ojson::array({p.p0.convert_to<long long>(), p.p1.convert_to<long long>(),
                                    p.p2.convert_to<long long>(),
                                    p.p3.convert_to<long long>()}));
    }
    return arr.dump();
}

std::string delta_membership_json(const std::string& collection_json,
                                  const std::vector<std::string>& coords, bool per_case) {
    const Bounds b = bounds_from_spec(collection_json);
    const Point x = point_from_strings(coords);
    ojson arr = ojson::array();
    for (DeltaLabel l : per_case ? case_delta_membership(b, x) : delta_membership(b, x)) {
        arr.push_back(to_string(l));
    }
    return arr.dump();
}

std::string sample_stratum_json(const std::string& collection_json, const std::string& label,
                                std::uint64_t seed) {
    const Bounds b = bounds_from_spec(collection_json);
    const StratumSample s = sample_on_stratum(b, parse_delta_label(label), seed);
    ojson j;
    switch (s.status) {
        case StratumSample::Status::found: j["status"] = "found"; break;
        case StratumSample::Status::infeasible: j["status"] = "infeasible"; break;
        case StratumSample::Status::exhausted: j["status"] = "exhausted"; break;
    }
    if (s.point) j["point"] = point_to_json(*s.point);
    j["attempts"] = s.attempts;
    return j.dump();
}

std::string verify_run_json(const std::string& collection_json, std::size_t generic_n,
                            std::size_t integrality_n, std::size_t delta_n,
                            std::uint64_t seed) {
    const Bounds b = bounds_from_spec(collection_json);
    SampleStrategy s;
    s.seed = seed;
    const auto [lo, hi] = default_range(b);
    s.lo = lo;
    s.hi = hi;

    s.mode = SampleStrategy::Mode::generic;
    auto pts = sample_points(b, s, generic_n).points;
    s.mode = SampleStrategy::Mode::integrality;
    const auto ig = sample_points(b, s, integrality_n);
    pts.insert(pts.end(), ig.points.begin(), ig.points.end());
    s.mode = SampleStrategy::Mode::delta_strata;
    const auto ds = sample_points(b, s, delta_n);
    pts.insert(pts.end(), ds.points.begin(), ds.points.end());

    Report theorem = check_theorem(b, pts, seed);
    theorem.shortfall = ds.shortfall;
    const Report triple = check_triple_law(pts, seed);
    const Report ranges = check_shift_ranges(pts, seed);
    const Report decomp = check_delta_decomposition(b, pts, seed);

    ojson j;
    j["collection"] = bounds_to_json(b);
    j["extension"] = !b.k.all_finite();
    j["reports"] = ojson::array();
    bool pass = true;
    const Report* reports[] = {&theorem, &triple, &ranges, &decomp};
    for (const Report* r : reports) {
        j["reports"].push_back(report_to_json(*r, "--collection <inline>"));
        pass = pass && r->pass();
    }
    j["pass"] = pass;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_stabregion, m) {
    m.doc() = "Exact classification of the length-4 collection stability region";

    m.def("preset_quadric", &preset_quadric_json, "Built-in collection spec as JSON");
    m.def("derive_bounds", &bounds_json, py::arg("collection_json"),
          "Collection spec plus the derived K bounds, as JSON");
    m.def("classify", &classify_json, py::arg("collection_json"), py::arg("point"),
          "Region verdict for a point (four rational strings), as JSON");
    m.def("relation_profile", &relation_profile_json, py::arg("point"),
          "Relation exponents (a12, a13, a23) as a JSON array");
    m.def("candidate_shifts", &candidate_shifts_json, py::arg("point"),
          "The 8 candidate shift vectors as a JSON array");
    m.def("delta_membership", &delta_membership_json, py::arg("collection_json"),
          py::arg("point"), py::arg("per_case") = false,
          "Stratum labels containing the point, as a JSON array");
    m.def("sample_stratum", &sample_stratum_json, py::arg("collection_json"), py::arg("label"),
          py::arg("seed"), "Constructive stratum sample result as JSON");
    m.def("verify", &verify_run_json, py::arg("collection_json"), py::arg("generic") = 1000,
          py::arg("integrality") = 1000, py::arg("delta") = 48, py::arg("seed") = 1,
          "Run the differential checks; returns the combined report as JSON");
}
