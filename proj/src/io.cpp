#include "stabregion/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace stabreg {

namespace {

ojson extint_to_json(const ExtInt& e) {
    if (!e.finite()) return ojson("inf");
    const Int& v = e.value();
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max()) {
        return ojson(v.convert_to<long long>());
    }
    return ojson(v.str());
}

ExtInt extint_from_json(const ojson& j, const std::string& key) {
    if (j.is_string()) return parse_extint(j.get<std::string>());
    if (j.is_number_integer()) return ExtInt(static_cast<long long>(j.get<long long>()));
    throw std::invalid_argument("collection field '" + key + "' must be an integer or \"inf\"");
}

ojson int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max()) {
        return ojson(v.convert_to<long long>());
    }
    return ojson(v.str());
}

ojson labels_to_json(const std::vector<DeltaLabel>& labels) {
    ojson arr = ojson::array();
    for (DeltaLabel l : labels) arr.push_back(to_string(l));
    return arr;
}

}  // namespace

HomDegrees collection_from_json(const ojson& j) {
    if (!j.is_object()) throw std::invalid_argument("collection spec must be a JSON object");
    HomDegrees k;
    const std::pair<const char*, ExtInt*> fields[] = {
        {"k01", &k.k01}, {"k02", &k.k02}, {"k03", &k.k03},
        {"k12", &k.k12}, {"k13", &k.k13}, {"k23", &k.k23},
    };
    for (const auto& [name, slot] : fields) {
        if (!j.contains(name)) {
            throw std::invalid_argument(std::string("collection spec is missing '") + name + "'");
        }
        *slot = extint_from_json(j.at(name), name);
    }
    return k;
}

HomDegrees load_collection_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open collection file: " + path);
    ojson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
    }
    return collection_from_json(j);
}

ojson collection_to_json(const HomDegrees& k) {
    ojson j;
    j["k01"] = extint_to_json(k.k01);
    j["k02"] = extint_to_json(k.k02);
    j["k03"] = extint_to_json(k.k03);
    j["k12"] = extint_to_json(k.k12);
    j["k13"] = extint_to_json(k.k13);
    j["k23"] = extint_to_json(k.k23);
    return j;
}

ojson bounds_to_json(const Bounds& b) {
    ojson j = collection_to_json(b.k);
    j["K02"] = extint_to_json(b.K02);
    j["K13"] = extint_to_json(b.K13);
    j["K03"] = extint_to_json(b.K03);
    return j;
}

ojson point_to_json(const Point& x) {
    return ojson::array({format_rational(x.x0), format_rational(x.x1), format_rational(x.x2),
                         format_rational(x.x3)});
}

Point point_from_strings(const std::vector<std::string>& coords) {
    if (coords.size() != 4) {
        throw std::invalid_argument("a point needs exactly four rational coordinates");
    }
    return Point{parse_rational(coords[0]), parse_rational(coords[1]),
                 parse_rational(coords[2]), parse_rational(coords[3])};
}

ojson witness_to_json(const Witness& w) {
    ojson j;
    j["shift"] = ojson::array({int_to_json(w.shift.p0), int_to_json(w.shift.p1),
                               int_to_json(w.shift.p2), int_to_json(w.shift.p3)});
    j["z"] = point_to_json(w.z);
    return j;
}

ojson verdict_to_json(const RegionVerdict& v) {
    ojson j;
    switch (v.kind) {
        case RegionVerdict::Kind::NotInTheta1:
            j["verdict"] = "NotInTheta1";
            j["violations"] = v.violations;
            break;
        case RegionVerdict::Kind::InDelta:
            j["verdict"] = "InDelta";
            j["labels"] = labels_to_json(v.labels);
            break;
        case RegionVerdict::Kind::InTheta2: {
            j["verdict"] = "InTheta2";
            ojson w = witness_to_json(*v.witness);
            j["shift"] = std::move(w["shift"]);
            j["z"] = std::move(w["z"]);
            j["case"] = to_string(v.case_tag);
            j["branch"] = v.branch;
            j["fallback"] = v.fallback;
            break;
        }
        case RegionVerdict::Kind::NoWitness:
            j["verdict"] = "NoWitness";
            j["labels"] = ojson::array();
            j["case"] = to_string(v.case_tag);
            j["branch"] = v.branch;
            break;
    }
    return j;
}

ojson report_to_json(const Report& r, const std::string& collection_ref) {
    ojson j;
    j["check"] = r.check;
    j["points"] = r.n_points;
    if (r.shortfall > 0) j["shortfall"] = r.shortfall;
    j["counts"] = {
        {"outside", r.outside},
        {"in_delta", r.in_delta},
        {"witnessed", r.witnessed},
        {"unaccounted", r.unaccounted},
    };
    if (r.check == "theorem") {
        j["branch_table"] = {{"prescribed_ok", r.prescribed_ok}, {"fallbacks", r.fallbacks}};
    }
    j["mismatches"] = ojson::array();
    for (const Mismatch& m : r.mismatches) {
        ojson mj;
        mj["index"] = m.index;
        mj["kind"] = m.kind;
        mj["point"] = point_to_json(m.x);
        mj["profile"] = {m.profile.a12, m.profile.a13, m.profile.a23};
        if (!m.merged.empty() || m.kind == "decomposition") {
            mj["merged"] = labels_to_json(m.merged);
        }
        if (m.kind == "decomposition") mj["per_case"] = labels_to_json(m.per_case);
        if (m.kind == "witness-in-delta") mj["witness_found"] = m.witness_found;
        mj["seed"] = m.seed;
        std::ostringstream replay;
        replay << "stabregion classify " << collection_ref << " -x " << format_rational(m.x.x0)
               << " " << format_rational(m.x.x1) << " " << format_rational(m.x.x2) << " "
               << format_rational(m.x.x3);
        mj["replay"] = replay.str();
        j["mismatches"].push_back(std::move(mj));
    }
    j["pass"] = r.pass();
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "[" << (r.pass() ? "PASS" : "FAIL") << "] " << r.check << ": " << r.n_points
        << " points";
    if (r.shortfall > 0) out << " (shortfall " << r.shortfall << ")";
    out << ", outside=" << r.outside << ", in_delta=" << r.in_delta
        << ", witnessed=" << r.witnessed << ", unaccounted=" << r.unaccounted;
    if (r.check == "theorem") {
        out << ", branch_ok=" << r.prescribed_ok << ", fallbacks=" << r.fallbacks;
    }
    out << ", mismatches=" << r.mismatches.size() << " (" << r.elapsed_ms << " ms)";
    return out.str();
}

}  // namespace stabreg
