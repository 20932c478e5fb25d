// stabregion: classify phase vectors of a length-4 collection, certify the
// region identities on exact-rational samples, and export 2D slices of the
// stratification.

#include "CLI11.hpp"

#include "stabregion/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace stabreg;

namespace {

struct CollectionChoice {
    std::string preset;
    std::string file;
    int fuzz = 0;

    // (bounds, reference string for replay commands) per requested collection
    std::vector<std::pair<Bounds, std::string>> resolve(std::uint64_t seed) const {
        std::vector<std::pair<Bounds, std::string>> out;
        if (!preset.empty()) {
            if (preset != "quadric") {
                throw CLI::ValidationError("--preset", "unknown preset '" + preset + "'");
            }
            out.emplace_back(derive_bounds(preset_quadric()), "--preset quadric");
        } else if (!file.empty()) {
            out.emplace_back(derive_bounds(load_collection_file(file)), "--collection " + file);
        } else if (fuzz > 0) {
            for (int i = 0; i < fuzz; ++i) {
                const HomDegrees k = random_collection(seed + i);
                out.emplace_back(derive_bounds(k),
                                 "--collection <fuzz seed " + std::to_string(seed + i) + ">");
            }
        } else {
            throw CLI::ValidationError("collection",
                                       "one of --preset, --collection, --fuzz is required");
        }
        return out;
    }
};

void add_collection_flags(CLI::App* cmd, CollectionChoice& choice, bool allow_fuzz) {
    auto* p = cmd->add_option("--preset", choice.preset, "Built-in collection (quadric)");
    auto* c = cmd->add_option("--collection", choice.file, "Collection spec JSON file");
    p->excludes(c);
    if (allow_fuzz) {
        auto* f = cmd->add_option("--fuzz", choice.fuzz,
                                  "Use N random collections with degrees in [-3,5]");
        f->excludes(p)->excludes(c);
    }
}

int run_classify(const CollectionChoice& choice, const std::vector<std::string>& coords) {
    const auto resolved = choice.resolve(1);
    const Bounds& b = resolved.front().first;
    const Point x = point_from_strings(coords);
    const RegionVerdict v = classify(b, x);
    std::cout << verdict_to_json(v).dump(2) << "\n";
    switch (v.kind) {
        case RegionVerdict::Kind::InTheta2: return 0;
        case RegionVerdict::Kind::InDelta: return 1;
        case RegionVerdict::Kind::NotInTheta1: return 2;
        case RegionVerdict::Kind::NoWitness: return 4;
    }
    return 4;
}

struct VerifyOptions {
    std::size_t generic = 10000;
    std::size_t strata = 10000;   // integrality-strata samples
    std::size_t delta = 64;       // delta-strata samples (per collection)
    std::size_t grid = 0;         // lattice samples
    std::uint64_t seed = 1;
    int den = 64;
    std::string out_json;
    std::string out_text;
};

int run_verify(const CollectionChoice& choice, const VerifyOptions& opt) {
    ojson result;
    result["collections"] = ojson::array();
    std::ostringstream text;
    bool all_pass = true;

    for (const auto& [b, ref] : choice.resolve(opt.seed)) {
        SampleStrategy s;
        s.denominator_bound = opt.den;
        const auto [lo, hi] = default_range(b);
        s.lo = lo;
        s.hi = hi;
        s.seed = opt.seed;

        s.mode = SampleStrategy::Mode::generic;
        auto generic = sample_points(b, s, opt.generic);
        s.mode = SampleStrategy::Mode::integrality;
        auto integral = sample_points(b, s, opt.strata);
        s.mode = SampleStrategy::Mode::delta_strata;
        auto strata = sample_points(b, s, opt.delta);
        s.mode = SampleStrategy::Mode::grid;
        auto grid = sample_points(b, s, opt.grid);

        std::vector<Point> all = generic.points;
        all.insert(all.end(), integral.points.begin(), integral.points.end());
        all.insert(all.end(), strata.points.begin(), strata.points.end());
        all.insert(all.end(), grid.points.begin(), grid.points.end());

        Report theorem = check_theorem(b, all, opt.seed);
        theorem.shortfall = strata.shortfall;
        const Report triple = check_triple_law(all, opt.seed);
        const Report ranges = check_shift_ranges(all, opt.seed);
        const Report decomp = check_delta_decomposition(b, all, opt.seed);

        ojson entry;
        entry["collection"] = bounds_to_json(b);
        entry["reference"] = ref;
        entry["extension"] = !b.k.all_finite();
        entry["samples"] = {{"generic", generic.points.size()},
                            {"integrality", integral.points.size()},
                            {"delta_strata", strata.points.size()},
                            {"delta_shortfall", strata.shortfall},
                            {"grid", grid.points.size()}};
        entry["reports"] = ojson::array();
        text << ref << "\n";
        const Report* reports[] = {&theorem, &triple, &ranges, &decomp};
        for (const Report* r : reports) {
            entry["reports"].push_back(report_to_json(*r, ref));
            text << "  " << report_to_text(*r) << "\n";
            all_pass = all_pass && r->pass();
        }
        result["collections"].push_back(std::move(entry));
    }
    result["pass"] = all_pass;

    if (!opt.out_json.empty()) {
        std::ofstream out(opt.out_json);
        if (!out) throw std::runtime_error("cannot write " + opt.out_json);
        out << result.dump(2) << "\n";
    }
    if (!opt.out_text.empty()) {
        std::ofstream out(opt.out_text);
        if (!out) throw std::runtime_error("cannot write " + opt.out_text);
        out << text.str();
    }
    std::cout << text.str();
    std::cout << (all_pass ? "verify: PASS" : "verify: FAIL") << "\n";
    return all_pass ? 0 : 1;
}

struct SliceSpec {
    // index -> value for the two fixed coordinates
    std::map<int, Rational> fixed;
    // (index, min, max, step) for the two swept coordinates, in option order
    struct Sweep {
        int index;
        Rational min, max, step;
    };
    std::vector<Sweep> sweeps;
    std::string format = "csv";
    std::string out;
};

int coord_index(const std::string& name) {
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] <= '3') {
        return name[1] - '0';
    }
    throw CLI::ValidationError("slice", "coordinate must be one of x0, x1, x2, x3");
}

void parse_fix(SliceSpec& spec, const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        throw CLI::ValidationError("--fix", "expected NAME=VALUE, got '" + text + "'");
    }
    spec.fixed[coord_index(text.substr(0, eq))] = parse_rational(text.substr(eq + 1));
}

void parse_sweep(SliceSpec& spec, const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        throw CLI::ValidationError("--sweep", "expected NAME=MIN:MAX:STEP, got '" + text + "'");
    }
    const int idx = coord_index(text.substr(0, eq));
    const std::string rest = text.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw CLI::ValidationError("--sweep", "expected NAME=MIN:MAX:STEP, got '" + text + "'");
    }
    SliceSpec::Sweep sw;
    sw.index = idx;
    sw.min = parse_rational(rest.substr(0, c1));
    sw.max = parse_rational(rest.substr(c1 + 1, c2 - c1 - 1));
    sw.step = parse_rational(rest.substr(c2 + 1));
    if (!(sw.step > 0)) throw CLI::ValidationError("--sweep", "step must be > 0");
    if (!(sw.min < sw.max)) throw CLI::ValidationError("--sweep", "min must be < max");
    spec.sweeps.push_back(std::move(sw));
}

std::string cell_tag(const RegionVerdict& v) {
    switch (v.kind) {
        case RegionVerdict::Kind::NotInTheta1: return "outside";
        case RegionVerdict::Kind::InTheta2: return "theta2";
        case RegionVerdict::Kind::NoWitness: return "unresolved";
        case RegionVerdict::Kind::InDelta: {
            std::string tag;
            for (const DeltaLabel l : v.labels) {
                if (!tag.empty()) tag += "+";
                tag += to_string(l);
            }
            return tag;
        }
    }
    return "outside";
}

const std::vector<std::pair<std::string, std::string>>& slice_palette() {
    static const std::vector<std::pair<std::string, std::string>> palette = {
        {"outside", "#ffffff"}, {"theta2", "#2e7d32"}, {"D1", "#e53935"},
        {"D2", "#fb8c00"},      {"D3", "#fdd835"},     {"D4", "#5e35b1"},
        {"D5", "#1e88e5"},      {"unresolved", "#212121"},
    };
    return palette;
}

std::string cell_color(const std::string& tag) {
    for (const auto& [name, color] : slice_palette()) {
        if (tag == name || tag.rfind(name + "+", 0) == 0) return color;
    }
    return "#9e9e9e";
}

int run_slice(const CollectionChoice& choice, const SliceSpec& spec) {
    if (spec.fixed.size() != 2 || spec.sweeps.size() != 2) {
        throw CLI::ValidationError("slice", "need exactly two --fix and two --sweep");
    }
    bool used[4] = {false, false, false, false};
    for (const auto& [idx, value] : spec.fixed) used[idx] = true;
    for (const auto& sw : spec.sweeps) {
        if (used[sw.index]) {
            throw CLI::ValidationError("slice", "coordinates must not repeat");
        }
        used[sw.index] = true;
    }
    if (spec.format != "csv" && spec.format != "svg") {
        throw CLI::ValidationError("--format", "must be csv or svg");
    }

    const auto resolved = choice.resolve(1);
    const Bounds& b = resolved.front().first;

    const auto& s1 = spec.sweeps[0];
    const auto& s2 = spec.sweeps[1];
    std::vector<Rational> axis1, axis2;
    for (Rational v = s1.min; v <= s1.max; v += s1.step) axis1.push_back(v);
    for (Rational v = s2.min; v <= s2.max; v += s2.step) axis2.push_back(v);

    const auto point_at = [&](const Rational& v1, const Rational& v2) {
        Point x;
        Rational* slots[4] = {&x.x0, &x.x1, &x.x2, &x.x3};
        for (const auto& [idx, value] : spec.fixed) *slots[idx] = value;
        *slots[s1.index] = v1;
        *slots[s2.index] = v2;
        return x;
    };

    std::ostringstream out;
    if (spec.format == "csv") {
        out << "x" << s1.index << ",x" << s2.index << ",verdict\n";
        for (const Rational& v1 : axis1) {
            for (const Rational& v2 : axis2) {
                out << format_rational(v1) << "," << format_rational(v2) << ","
                    << cell_tag(classify(b, point_at(v1, v2))) << "\n";
            }
        }
    } else {
        const int cell = 8, legend_w = 150;
        const int w = static_cast<int>(axis1.size()) * cell + legend_w;
        const int h = std::max<int>(static_cast<int>(axis2.size()) * cell,
                                    static_cast<int>(slice_palette().size()) * 18 + 10);
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
            << "\">\n";
        for (std::size_t i = 0; i < axis1.size(); ++i) {
            for (std::size_t j = 0; j < axis2.size(); ++j) {
                const std::string tag = cell_tag(classify(b, point_at(axis1[i], axis2[j])));
                // axis2 increases upward
                out << "<rect x=\"" << i * cell << "\" y=\"" << (axis2.size() - 1 - j) * cell
                    << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
                    << cell_color(tag) << "\"/>\n";
            }
        }
        int ly = 10;
        for (const auto& [name, color] : slice_palette()) {
            out << "<rect x=\"" << axis1.size() * cell + 10 << "\" y=\"" << ly
                << "\" width=\"12\" height=\"12\" fill=\"" << color
                << "\" stroke=\"#000000\"/>\n";
            out << "<text x=\"" << axis1.size() * cell + 28 << "\" y=\"" << ly + 11
                << "\" font-size=\"12\" font-family=\"monospace\">" << name << "</text>\n";
            ly += 18;
        }
        out << "</svg>\n";
    }

    if (spec.out.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(spec.out);
        if (!f) throw std::runtime_error("cannot write " + spec.out);
        f << out.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of the length-4 collection stability region"};
    app.require_subcommand(1);

    // classify
    CollectionChoice classify_choice;
    std::vector<std::string> coords;
    auto* cmd_classify = app.add_subcommand("classify", "Classify one phase point");
    add_collection_flags(cmd_classify, classify_choice, false);
    cmd_classify->add_option("-x", coords, "Point as four rationals (p/q or integers)")
        ->expected(4)
        ->required();

    // verify
    CollectionChoice verify_choice;
    VerifyOptions vopt;
    auto* cmd_verify = app.add_subcommand("verify", "Run the differential certification checks");
    add_collection_flags(cmd_verify, verify_choice, true);
    cmd_verify->add_option("--generic", vopt.generic, "Generic sample count");
    cmd_verify->add_option("--strata", vopt.strata, "Integrality-strata sample count");
    cmd_verify->add_option("--delta", vopt.delta, "Delta-strata sample budget");
    cmd_verify->add_option("--grid", vopt.grid, "Lattice sample count");
    cmd_verify->add_option("--seed", vopt.seed, "Sampling seed");
    cmd_verify->add_option("--den", vopt.den, "Denominator bound");
    cmd_verify->add_option("--out", vopt.out_json, "Write the JSON report here");
    cmd_verify->add_option("--text", vopt.out_text, "Write the text summary here");

    // slice
    CollectionChoice slice_choice;
    SliceSpec spec;
    std::vector<std::string> fixes, sweeps;
    auto* cmd_slice = app.add_subcommand("slice", "Rasterize a 2D slice of the stratification");
    add_collection_flags(cmd_slice, slice_choice, false);
    cmd_slice->add_option("--fix", fixes, "Fixed coordinate, NAME=VALUE")->expected(-2);
    cmd_slice->add_option("--sweep", sweeps, "Swept coordinate, NAME=MIN:MAX:STEP")->expected(-2);
    cmd_slice->add_option("--format", spec.format, "csv or svg");
    cmd_slice->add_option("--out", spec.out, "Output file (default stdout)");

    // preset
    auto* cmd_preset = app.add_subcommand("preset", "Print the built-in collection spec");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_classify->parsed()) return run_classify(classify_choice, coords);
        if (cmd_verify->parsed()) return run_verify(verify_choice, vopt);
        if (cmd_slice->parsed()) {
            for (const auto& f : fixes) parse_fix(spec, f);
            for (const auto& s : sweeps) parse_sweep(spec, s);
            return run_slice(slice_choice, spec);
        }
        if (cmd_preset->parsed()) {
            std::cout << collection_to_json(preset_quadric()).dump(2) << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
    return 0;
}
