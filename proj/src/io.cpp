#include "bda/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bda/error.hpp"
#include "bda/raster.hpp"
#include "bda/textfmt.hpp"

namespace bda::io {

namespace {

using ojson = nlohmann::ordered_json;

std::string where(std::string_view source, std::size_t line) {
    return std::string(source) + ":" + std::to_string(line);
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& msg) {
    throw Error(Errc::ParseError, where(source, line) + ": " + msg);
}

ojson parse_json(std::string_view text, std::string_view source) {
    try {
        return ojson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
        fail(source, line, "invalid JSON (" + std::string(e.what()) + ")");
    }
}

// Lines of a CSV body: LF separated, CR before LF tolerated, a final empty
// line ignored.
std::vector<std::string_view> csv_lines(std::string_view text) {
    auto lines = text::split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (auto& l : lines) {
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    }
    return lines;
}

void expect_header(const std::vector<std::string_view>& lines, std::string_view header,
                   std::string_view source) {
    if (lines.empty() || lines.front() != header) {
        fail(source, 1, "expected header '" + std::string(header) + "'");
    }
}

std::vector<std::string_view> fields(std::string_view line, std::size_t n, std::string_view source,
                                     std::size_t lineno) {
    auto f = text::split(line, ',');
    if (f.size() != n) {
        fail(source, lineno, "expected " + std::to_string(n) + " fields, got " + std::to_string(f.size()));
    }
    return f;
}

double number_field(std::string_view s, std::string_view name, std::string_view source, std::size_t lineno) {
    double v = 0.0;
    if (!text::parse_double(s, v) || !std::isfinite(v)) {
        fail(source, lineno, "bad " + std::string(name) + " '" + std::string(s) + "'");
    }
    return v;
}

std::string id_field(std::string_view s, std::string_view name, std::string_view source, std::size_t lineno) {
    if (!is_valid_id(s)) {
        fail(source, lineno, "bad " + std::string(name) + " '" + std::string(s) + "'");
    }
    return std::string(s);
}

geom::Ring parse_ring(const ojson& coords, const std::string& ctx) {
    if (!coords.is_array()) throw Error(Errc::ParseError, ctx + ": ring is not an array");
    std::vector<geom::GeoPoint> pts;
    pts.reserve(coords.size());
    for (const auto& c : coords) {
        if (!c.is_array() || c.size() < 2 || !c[0].is_number() || !c[1].is_number()) {
            throw Error(Errc::ParseError, ctx + ": position must be [lon, lat]");
        }
        pts.push_back({c[0].get<double>(), c[1].get<double>()});
    }
    try {
        return geom::Ring(std::move(pts));
    } catch (const Error& e) {
        throw Error(Errc::InvalidGeometry, ctx + ": " + e.what());
    }
}

std::string feature_id(const ojson& feature, const std::string& ctx) {
    const ojson* raw = nullptr;
    if (feature.contains("id")) {
        raw = &feature["id"];
    } else if (feature.contains("properties") && feature["properties"].is_object() &&
               feature["properties"].contains("id")) {
        raw = &feature["properties"]["id"];
    }
    if (raw == nullptr) throw Error(Errc::ParseError, ctx + ": feature has no id");
    std::string id;
    if (raw->is_string()) {
        id = raw->get<std::string>();
    } else if (raw->is_number_integer()) {
        id = raw->dump();
    } else {
        throw Error(Errc::ParseError, ctx + ": feature id must be a string or integer");
    }
    if (!is_valid_id(id)) throw Error(Errc::ParseError, ctx + ": feature id '" + id + "' has invalid characters");
    return id;
}

ojson ring_json(const geom::Ring& ring) {
    ojson arr = ojson::array();
    for (const auto& v : ring.vertices()) arr.push_back({v.lon, v.lat});
    return arr;
}

std::string feature_collection(const std::vector<ojson>& features) {
    std::string out = "{\"type\":\"FeatureCollection\",\"features\":[\n";
    for (std::size_t i = 0; i < features.size(); ++i) {
        out += features[i].dump();
        out += i + 1 < features.size() ? ",\n" : "\n";
    }
    out += "]}\n";
    return out;
}

const ojson& features_of(const ojson& doc, std::string_view source) {
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" || !doc.contains("features") ||
        !doc["features"].is_array()) {
        fail(source, 1, "expected a GeoJSON FeatureCollection");
    }
    return doc["features"];
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

geom::GeoPoint spec_point(const ojson& j, const std::string& key, std::string_view source) {
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    if (j.is_object() && j.contains("lon") && j.contains("lat") && j["lon"].is_number() &&
        j["lat"].is_number() && j.size() == 2) {
        return {j["lon"].get<double>(), j["lat"].get<double>()};
    }
    throw Error(Errc::ParseError, std::string(source) + ": '" + key + "' must be {\"lon\":…,\"lat\":…} or [lon, lat]");
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Io, "cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::Io, "cannot open '" + path.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(Errc::Io, "failed writing '" + path.string() + "'");
}

bool is_valid_id(std::string_view id) noexcept {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    });
}

std::vector<FootprintRecord> parse_footprints(std::string_view text, std::string_view source) {
    const ojson doc = parse_json(text, source);
    const ojson& features = features_of(doc, source);
    std::vector<FootprintRecord> out;
    out.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        const ojson& f = features[i];
        const std::string ctx = std::string(source) + ": feature " + std::to_string(i);
        if (!f.is_object() || !f.contains("geometry") || !f["geometry"].is_object()) {
            throw Error(Errc::ParseError, ctx + ": missing geometry");
        }
        const std::string id = feature_id(f, ctx);
        const ojson& g = f["geometry"];
        const std::string type = g.value("type", "");
        const ojson* rings = nullptr;
        if (type == "Polygon") {
            rings = &g["coordinates"];
        } else if (type == "MultiPolygon" && g["coordinates"].is_array() && g["coordinates"].size() == 1) {
            rings = &g["coordinates"][0];
        } else {
            throw Error(Errc::ParseError, ctx + " (" + id + "): geometry must be a Polygon or single-part MultiPolygon");
        }
        if (!rings->is_array() || rings->empty()) {
            throw Error(Errc::ParseError, ctx + " (" + id + "): polygon has no rings");
        }
        geom::Ring exterior = parse_ring((*rings)[0], ctx + " (" + id + ")");
        std::vector<geom::Ring> holes;
        for (std::size_t r = 1; r < rings->size(); ++r) holes.push_back(parse_ring((*rings)[r], ctx + " (" + id + ")"));
        FootprintRecord rec;
        try {
            rec.footprint = geom::Footprint(id, std::move(exterior), std::move(holes));
        } catch (const Error& e) {
            throw Error(Errc::InvalidGeometry, ctx + ": " + e.what());
        }
        if (f.contains("properties") && f["properties"].is_object()) rec.properties = f["properties"];
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<geom::Footprint> footprints_of(std::span<const FootprintRecord> records) {
    std::vector<geom::Footprint> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.footprint);
    return out;
}

nlohmann::ordered_json polygon_geometry(const geom::Footprint& fp) {
    ojson rings = ojson::array();
    rings.push_back(ring_json(fp.exterior()));
    for (const auto& h : fp.holes()) rings.push_back(ring_json(h));
    ojson g;
    g["type"] = "Polygon";
    g["coordinates"] = std::move(rings);
    return g;
}

std::string write_footprints(std::span<const geom::Footprint> fps) {
    std::vector<ojson> features;
    features.reserve(fps.size());
    for (const auto& fp : fps) {
        ojson f;
        f["type"] = "Feature";
        f["id"] = fp.id();
        f["properties"] = ojson::object();
        f["geometry"] = polygon_geometry(fp);
        features.push_back(std::move(f));
    }
    return feature_collection(features);
}

double round_half_up_2(double v) noexcept { return std::floor(v * 100.0 + 0.5) / 100.0; }

std::string write_assessed(std::span<const FootprintRecord> records,
                           std::span<const zonal::DamageEstimate> estimates) {
    std::vector<ojson> features;
    features.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        const auto& est = estimates[i];
        ojson props = rec.properties;
        props["damage_pct"] = round_half_up_2(est.y_hat);
        props["n_inside"] = est.n_inside;
        props["n_damaged"] = est.n_damaged;
        props["supersampled"] = est.supersampled;
        props["no_coverage"] = est.no_coverage;
        ojson f;
        f["type"] = "Feature";
        f["id"] = rec.footprint.id();
        f["properties"] = std::move(props);
        f["geometry"] = polygon_geometry(rec.footprint);
        features.push_back(std::move(f));
    }
    return feature_collection(features);
}

std::vector<zonal::DamageEstimate> parse_assessed(std::string_view text, std::string_view source) {
    const ojson doc = parse_json(text, source);
    const ojson& features = features_of(doc, source);
    std::vector<zonal::DamageEstimate> out;
    out.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        const ojson& f = features[i];
        const std::string ctx = std::string(source) + ": feature " + std::to_string(i);
        if (!f.is_object()) throw Error(Errc::ParseError, ctx + ": not an object");
        zonal::DamageEstimate est;
        est.footprint_id = feature_id(f, ctx);
        const ojson props = f.value("properties", ojson::object());
        if (!props.is_object()) throw Error(Errc::ParseError, ctx + ": properties must be an object");
        const bool has_counts = props.contains("n_inside") && props["n_inside"].is_number_integer() &&
                                props.contains("n_damaged") && props["n_damaged"].is_number_integer();
        if (has_counts) {
            est.n_inside = props["n_inside"].get<std::int64_t>();
            est.n_damaged = props["n_damaged"].get<std::int64_t>();
            if (est.n_inside < 0 || est.n_damaged < 0 || est.n_damaged > est.n_inside) {
                throw Error(Errc::ParseError, ctx + ": inconsistent n_inside/n_damaged");
            }
            est.y_hat = est.n_inside > 0 ? 100.0 * static_cast<double>(est.n_damaged) /
                                               static_cast<double>(est.n_inside)
                                         : 0.0;
        } else if (props.contains("damage_pct") && props["damage_pct"].is_number()) {
            est.y_hat = props["damage_pct"].get<double>();
            if (!(est.y_hat >= 0.0 && est.y_hat <= 100.0)) {
                throw Error(Errc::ParseError, ctx + ": damage_pct outside [0, 100]");
            }
        } else {
            throw Error(Errc::ParseError, ctx + ": no damage_pct or n_inside/n_damaged properties");
        }
        est.supersampled = props.value("supersampled", false);
        est.no_coverage = props.value("no_coverage", false);
        out.push_back(std::move(est));
    }
    return out;
}

std::vector<truth::GroundTruthPoint> parse_points(std::string_view text, std::string_view source) {
    const auto lines = csv_lines(text);
    expect_header(lines, "point_id,lon,lat,category", source);
    std::vector<truth::GroundTruthPoint> out;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto f = fields(lines[i], 4, source, lineno);
        truth::GroundTruthPoint p;
        p.id = id_field(f[0], "point_id", source, lineno);
        p.location = {number_field(f[1], "lon", source, lineno), number_field(f[2], "lat", source, lineno)};
        if (!geom::is_valid(p.location)) fail(source, lineno, "coordinates outside lon/lat range");
        const auto cat = truth::parse_category(f[3]);
        if (!cat) {
            throw Error(Errc::UnknownCategory,
                        where(source, lineno) + ": unknown category '" + std::string(f[3]) + "'");
        }
        p.category = *cat;
        if (!seen.insert(p.id).second) {
            throw Error(Errc::DuplicatePointId, where(source, lineno) + ": duplicate point id '" + p.id + "'");
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::string write_points(std::span<const truth::GroundTruthPoint> points) {
    std::string out = "point_id,lon,lat,category\n";
    for (const auto& p : points) {
        out += p.id + "," + text::format_double(p.location.lon) + "," + text::format_double(p.location.lat) +
               "," + std::string(truth::to_string(p.category)) + "\n";
    }
    return out;
}

std::string write_matches(std::span<const truth::GroundTruthPoint> points, const truth::MatchResult& result) {
    std::unordered_map<std::string_view, const truth::Match*> by_point;
    for (const auto& m : result.matched) by_point.emplace(m.point_id, &m);
    std::string out = "point_id,footprint_id,distance_m\n";
    for (const auto& p : points) {
        const auto it = by_point.find(p.id);
        if (it == by_point.end()) {
            out += p.id + ",,\n";
        } else {
            out += p.id + "," + it->second->footprint_id + "," + text::format_double(it->second->distance_m) + "\n";
        }
    }
    return out;
}

truth::MatchResult parse_matches(std::string_view text, std::string_view source) {
    const auto lines = csv_lines(text);
    expect_header(lines, "point_id,footprint_id,distance_m", source);
    truth::MatchResult out;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto f = fields(lines[i], 3, source, lineno);
        std::string pid = id_field(f[0], "point_id", source, lineno);
        if (!seen.insert(pid).second) {
            throw Error(Errc::DuplicatePointId, where(source, lineno) + ": duplicate point id '" + pid + "'");
        }
        if (f[1].empty() && f[2].empty()) {
            out.unmatched.push_back(std::move(pid));
            continue;
        }
        std::string fid = id_field(f[1], "footprint_id", source, lineno);
        const double d = number_field(f[2], "distance_m", source, lineno);
        if (d < 0.0) fail(source, lineno, "negative distance");
        out.matched.push_back({std::move(pid), std::move(fid), d});
    }
    return out;
}

std::string write_oracle(std::span<const geom::Footprint> fps, std::span<const truth::FemaCategory> categories) {
    std::string out = "footprint_id,category\n";
    for (std::size_t i = 0; i < fps.size(); ++i) {
        out += fps[i].id() + "," + std::string(truth::to_string(categories[i])) + "\n";
    }
    return out;
}

std::string write_curve(const metrics::PRCurve& curve) {
    std::string out = "theta,precision,recall\n";
    for (const auto& p : curve.points) {
        out += text::format_double(p.theta) + "," + text::format_double(p.precision) + "," +
               text::format_double(p.recall) + "\n";
    }
    return out;
}

std::vector<metrics::PRPoint> parse_curve(std::string_view text, std::string_view source) {
    const auto lines = csv_lines(text);
    expect_header(lines, "theta,precision,recall", source);
    if (lines.size() < 2) fail(source, 1, "curve has no points");
    std::vector<metrics::PRPoint> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto f = fields(lines[i], 3, source, lineno);
        metrics::PRPoint p;
        p.theta = number_field(f[0], "theta", source, lineno);
        p.precision = number_field(f[1], "precision", source, lineno);
        p.recall = number_field(f[2], "recall", source, lineno);
        if (p.precision < 0.0 || p.precision > 1.0 || p.recall < 0.0 || p.recall > 1.0) {
            fail(source, lineno, "precision and recall must lie in [0, 1]");
        }
        out.push_back(p);
    }
    return out;
}

std::string write_report(const metrics::ValidationReport& report) {
    ojson j;
    j["n_samples"] = report.n_samples;
    j["n_positive"] = report.n_positive;
    j["scheme"] = report.scheme;
    j["precision0"] = report.precision0;
    j["recall0"] = report.recall0;
    j["average_precision"] = report.ap;
    return j.dump(2) + "\n";
}

std::string render_pr_svg(std::span<const metrics::PRPoint> points) {
    // Plot area in viewBox units.
    constexpr double left = 80.0, right = 760.0, top = 40.0, bottom = 530.0;
    auto px = [&](double recall) { return left + recall * (right - left); };
    auto py = [&](double precision) { return bottom - precision * (bottom - top); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    s += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int k = 0; k <= 5; ++k) {
        const double v = k / 5.0;
        s += "<line x1=\"" + fmt2(px(v)) + "\" y1=\"" + fmt2(top) + "\" x2=\"" + fmt2(px(v)) + "\" y2=\"" +
             fmt2(bottom) + "\"/>\n";
        s += "<line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(py(v)) + "\" x2=\"" + fmt2(right) + "\" y2=\"" +
             fmt2(py(v)) + "\"/>\n";
    }
    s += "</g>\n";
    s += "<rect x=\"" + fmt2(left) + "\" y=\"" + fmt2(top) + "\" width=\"" + fmt2(right - left) + "\" height=\"" +
         fmt2(bottom - top) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    s += "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"black\">\n";
    for (int k = 0; k <= 5; ++k) {
        const double v = k / 5.0;
        char label[8];
        std::snprintf(label, sizeof label, "%.1f", v);
        s += "<text x=\"" + fmt2(px(v)) + "\" y=\"" + fmt2(bottom + 20.0) + "\" text-anchor=\"middle\">" + label +
             "</text>\n";
        s += "<text x=\"" + fmt2(left - 10.0) + "\" y=\"" + fmt2(py(v) + 5.0) + "\" text-anchor=\"end\">" + label +
             "</text>\n";
    }
    s += "<text x=\"" + fmt2(0.5 * (left + right)) + "\" y=\"580.00\" text-anchor=\"middle\" font-size=\"16\">Recall</text>\n";
    s += "<text x=\"25.00\" y=\"" + fmt2(0.5 * (top + bottom)) +
         "\" text-anchor=\"middle\" font-size=\"16\" transform=\"rotate(-90 25.00 " + fmt2(0.5 * (top + bottom)) +
         ")\">Precision</text>\n";
    s += "</g>\n";
    s += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) s += ' ';
        s += fmt2(px(points[i].recall)) + "," + fmt2(py(points[i].precision));
    }
    s += "\"/>\n";
    s += "</svg>\n";
    return s;
}

synth::SceneSpec parse_scene_spec(std::string_view text, std::string_view source) {
    const ojson doc = parse_json(text, source);
    if (!doc.is_object()) fail(source, 1, "scene spec must be a JSON object");
    synth::SceneSpec spec;
    const std::string src(source);
    auto number = [&](const std::string& key, const ojson& v) {
        if (!v.is_number()) throw Error(Errc::ParseError, src + ": '" + key + "' must be a number");
        return v.get<double>();
    };
    auto integer = [&](const std::string& key, const ojson& v) {
        if (!v.is_number_integer()) throw Error(Errc::ParseError, src + ": '" + key + "' must be an integer");
        return v.get<std::int64_t>();
    };
    for (const auto& [key, v] : doc.items()) {
        if (key == "seed") {
            if (!v.is_number_unsigned()) throw Error(Errc::ParseError, src + ": 'seed' must be a non-negative integer");
            spec.seed = v.get<std::uint64_t>();
        } else if (key == "grid_cols") {
            spec.grid_cols = static_cast<int>(std::clamp<std::int64_t>(integer(key, v), -1, 1 << 20));
        } else if (key == "grid_rows") {
            spec.grid_rows = static_cast<int>(std::clamp<std::int64_t>(integer(key, v), -1, 1 << 20));
        } else if (key == "building_size_m") {
            spec.building_size_m = number(key, v);
        } else if (key == "spacing_m") {
            spec.spacing_m = number(key, v);
        } else if (key == "origin") {
            spec.origin = spec_point(v, key, source);
        } else if (key == "swath_start") {
            spec.swath_start = spec_point(v, key, source);
        } else if (key == "swath_end") {
            spec.swath_end = spec_point(v, key, source);
        } else if (key == "swath_width_m") {
            spec.swath_width_m = number(key, v);
        } else if (key == "cellsize_m") {
            spec.cellsize_m = number(key, v);
        } else if (key == "pixel_noise_rate") {
            spec.pixel_noise_rate = number(key, v);
        } else if (key == "point_jitter_sigma_m") {
            spec.point_jitter_sigma_m = number(key, v);
        } else if (key == "point_drop_rate") {
            spec.point_drop_rate = number(key, v);
        } else if (key == "major_fraction_inner") {
            spec.major_fraction_inner = number(key, v);
        } else if (key == "major_fraction_outer") {
            spec.major_fraction_outer = number(key, v);
        } else {
            throw Error(Errc::ParseError, src + ": unknown scene spec key '" + key + "'");
        }
    }
    return spec;
}

std::string write_scene_spec(const synth::SceneSpec& spec) {
    auto pt = [](const geom::GeoPoint& p) {
        ojson j;
        j["lon"] = p.lon;
        j["lat"] = p.lat;
        return j;
    };
    ojson j;
    j["seed"] = spec.seed;
    j["grid_cols"] = spec.grid_cols;
    j["grid_rows"] = spec.grid_rows;
    j["building_size_m"] = spec.building_size_m;
    j["spacing_m"] = spec.spacing_m;
    j["origin"] = pt(spec.origin);
    j["swath_start"] = pt(spec.swath_start);
    j["swath_end"] = pt(spec.swath_end);
    j["swath_width_m"] = spec.swath_width_m;
    j["cellsize_m"] = spec.cellsize_m;
    j["pixel_noise_rate"] = spec.pixel_noise_rate;
    j["point_jitter_sigma_m"] = spec.point_jitter_sigma_m;
    j["point_drop_rate"] = spec.point_drop_rate;
    j["major_fraction_inner"] = spec.major_fraction_inner;
    j["major_fraction_outer"] = spec.major_fraction_outer;
    return j.dump(2) + "\n";
}

void write_scene(const synth::SynthScene& scene, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(Errc::Io, "cannot create directory '" + dir.string() + "': " + ec.message());
    write_file(dir / "footprints.geojson", write_footprints(scene.footprints));
    write_file(dir / "raster.asc", raster::write_ascii_grid(scene.raster));
    write_file(dir / "truth.csv", write_points(scene.truth));
    write_file(dir / "oracle.csv", write_oracle(scene.footprints, scene.oracle_categories));
}

}  // namespace bda::io
