#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bda/geom.hpp"
#include "bda/metrics.hpp"
#include "bda/synth.hpp"
#include "bda/truth.hpp"
#include "bda/zonal.hpp"

namespace bda::io {

/// Throws Error(Io) naming the path.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Ids must match [A-Za-z0-9_-]+ so CSV fields never need quoting.
bool is_valid_id(std::string_view id) noexcept;

// GeoJSON -------------------------------------------------------------------

struct FootprintRecord {
    geom::Footprint footprint;
    nlohmann::ordered_json properties = nlohmann::ordered_json::object();
};

/// FeatureCollection of Polygon (or single-part MultiPolygon) features. The
/// id comes from the feature `id`, else `properties.id`. Diagnostics are
/// prefixed with `source`. Throws Error(ParseError | InvalidGeometry).
std::vector<FootprintRecord> parse_footprints(std::string_view text, std::string_view source);

std::vector<geom::Footprint> footprints_of(std::span<const FootprintRecord> records);

nlohmann::ordered_json polygon_geometry(const geom::Footprint& fp);

std::string write_footprints(std::span<const geom::Footprint> fps);

/// Input features with damage_pct (2 decimals, half-up), n_inside,
/// n_damaged, supersampled and no_coverage added to their properties.
/// `records` and `estimates` are parallel.
std::string write_assessed(std::span<const FootprintRecord> records,
                           std::span<const zonal::DamageEstimate> estimates);

/// Reads assess output back. y_hat is recomputed exactly from the counts
/// and only falls back to damage_pct when the counts are absent.
std::vector<zonal::DamageEstimate> parse_assessed(std::string_view text, std::string_view source);

double round_half_up_2(double v) noexcept;

// CSV -----------------------------------------------------------------------

/// Header `point_id,lon,lat,category`. Throws Error(ParseError |
/// UnknownCategory | DuplicatePointId).
std::vector<truth::GroundTruthPoint> parse_points(std::string_view text, std::string_view source);
std::string write_points(std::span<const truth::GroundTruthPoint> points);

/// Header `point_id,footprint_id,distance_m`, one row per point in input
/// order; unmatched rows leave the last two fields empty.
std::string write_matches(std::span<const truth::GroundTruthPoint> points, const truth::MatchResult& result);
truth::MatchResult parse_matches(std::string_view text, std::string_view source);

/// Header `footprint_id,category`.
std::string write_oracle(std::span<const geom::Footprint> fps,
                         std::span<const truth::FemaCategory> categories);

/// Header `theta,precision,recall`, decreasing theta.
std::string write_curve(const metrics::PRCurve& curve);
/// Throws Error(ParseError) for a missing header or zero data rows.
std::vector<metrics::PRPoint> parse_curve(std::string_view text, std::string_view source);

// Reports and plots -----------------------------------------------------------

std::string write_report(const metrics::ValidationReport& report);

/// Standalone 800×600 SVG of precision against recall on [0,1]².
std::string render_pr_svg(std::span<const metrics::PRPoint> points);

// Synthetic scenes -------------------------------------------------------------

/// Missing keys take SceneSpec defaults; unknown keys are rejected. Points
/// are `{"lon": x, "lat": y}` or `[lon, lat]`. Throws Error(ParseError).
synth::SceneSpec parse_scene_spec(std::string_view text, std::string_view source);
std::string write_scene_spec(const synth::SceneSpec& spec);

/// Writes footprints.geojson, raster.asc, truth.csv and oracle.csv.
void write_scene(const synth::SynthScene& scene, const std::filesystem::path& dir);

}  // namespace bda::io
