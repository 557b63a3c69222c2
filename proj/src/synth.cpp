#include "bda/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "bda/error.hpp"
#include "bda/zonal.hpp"

namespace bda::synth {

namespace {

constexpr double kTwoPow64 = 18446744073709551616.0;

void require(bool ok, const char* field, const char* rule) {
    if (!ok) throw Error(Errc::InvalidSpec, std::string("scene spec: ") + field + " " + rule);
}

std::string numbered(char prefix, std::size_t n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%c%05zu", prefix, n);
    return buf;
}

double swath_distance(const geom::GeoPoint& p, const SceneSpec& spec) noexcept {
    return geom::point_to_segment_distance_m(p, spec.swath_start, spec.swath_end, spec.origin.lat);
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> prng_next(std::uint64_t state) noexcept {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return {state, z ^ (z >> 31)};
}

double SplitMix64::next_unit() noexcept {
    return (static_cast<double>(next()) + 0.5) / kTwoPow64;
}

std::pair<double, double> gaussian_pair(SplitMix64& rng) noexcept {
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

void check(const SceneSpec& s) {
    require(s.grid_cols > 0 && s.grid_rows > 0, "grid_cols/grid_rows", "must be positive");
    require(s.building_size_m > 0.0, "building_size_m", "must be positive");
    require(s.spacing_m > s.building_size_m, "spacing_m", "must exceed building_size_m");
    require(s.cellsize_m > 0.0, "cellsize_m", "must be positive");
    require(s.building_size_m >= s.cellsize_m, "building_size_m", "must be at least cellsize_m");
    require(s.swath_width_m > 0.0, "swath_width_m", "must be positive");
    require(s.pixel_noise_rate >= 0.0 && s.pixel_noise_rate <= 1.0, "pixel_noise_rate", "must lie in [0, 1]");
    require(s.point_drop_rate >= 0.0 && s.point_drop_rate <= 1.0, "point_drop_rate", "must lie in [0, 1]");
    require(s.point_jitter_sigma_m >= 0.0 && std::isfinite(s.point_jitter_sigma_m), "point_jitter_sigma_m",
            "must be non-negative");
    require(s.major_fraction_inner > 0.0 && s.major_fraction_inner <= 1.0, "major_fraction_inner",
            "must lie in (0, 1]");
    require(s.major_fraction_outer > 0.0 && s.major_fraction_outer <= 1.0, "major_fraction_outer",
            "must lie in (0, 1]");
    require(geom::is_valid(s.origin), "origin", "must be a valid lon/lat");
    require(geom::is_valid(s.swath_start) && geom::is_valid(s.swath_end), "swath_start/swath_end",
            "must be valid lon/lat");
    const double cells_x = (s.grid_cols + 2.0) * s.spacing_m / s.cellsize_m;
    const double cells_y = (s.grid_rows + 2.0) * s.spacing_m / s.cellsize_m;
    require(cells_x * cells_y < 5.0e8, "cellsize_m", "yields a raster larger than 5e8 cells");
}

truth::FemaCategory category_from_swath(const geom::GeoPoint& centroid, const SceneSpec& spec) noexcept {
    const double d = swath_distance(centroid, spec);
    const double w = spec.swath_width_m;
    if (d <= 0.5 * w) return truth::FemaCategory::Destroyed;
    if (d <= w) return truth::FemaCategory::MajorDamage;
    if (d <= 1.5 * w) return truth::FemaCategory::MinorDamage;
    if (d <= 2.0 * w) return truth::FemaCategory::Affected;
    return truth::FemaCategory::NoVisibleDamage;
}

double damaged_share(truth::FemaCategory c, double d, const SceneSpec& spec) noexcept {
    switch (c) {
        case truth::FemaCategory::Destroyed: return 1.0;
        case truth::FemaCategory::MajorDamage: {
            const double w = spec.swath_width_m;
            const double t = std::clamp((d - 0.5 * w) / (0.5 * w), 0.0, 1.0);
            return spec.major_fraction_inner + t * (spec.major_fraction_outer - spec.major_fraction_inner);
        }
        default: return 0.0;
    }
}

SynthScene generate(const SceneSpec& spec) {
    check(spec);
    SplitMix64 rng(spec.seed);
    SynthScene scene;
    const double ref_lat = spec.origin.lat;
    const double half = 0.5 * spec.building_size_m;
    const double jitter = 0.25 * (spec.spacing_m - spec.building_size_m);

    // Buildings.
    std::vector<geom::GeoPoint> centroids;
    const auto n_buildings = static_cast<std::size_t>(spec.grid_cols) * static_cast<std::size_t>(spec.grid_rows);
    scene.footprints.reserve(n_buildings);
    centroids.reserve(n_buildings);
    for (int row = 0; row < spec.grid_rows; ++row) {
        for (int col = 0; col < spec.grid_cols; ++col) {
            const double jx = (2.0 * rng.next_unit() - 1.0) * jitter;
            const double jy = (2.0 * rng.next_unit() - 1.0) * jitter;
            const double east = (col + 0.5) * spec.spacing_m + jx;
            const double north = (row + 0.5) * spec.spacing_m + jy;
            const geom::GeoPoint sw = geom::offset_m(spec.origin, east - half, north - half, ref_lat);
            const geom::GeoPoint ne = geom::offset_m(spec.origin, east + half, north + half, ref_lat);
            scene.footprints.emplace_back(numbered('b', scene.footprints.size()),
                                          geom::rectangle(sw.lon, sw.lat, ne.lon, ne.lat));
            centroids.push_back({0.5 * (sw.lon + ne.lon), 0.5 * (sw.lat + ne.lat)});
        }
    }

    // Categories.
    scene.oracle_categories.reserve(n_buildings);
    bool any_damage = false;
    for (const auto& c : centroids) {
        const auto cat = category_from_swath(c, spec);
        any_damage = any_damage || cat != truth::FemaCategory::NoVisibleDamage;
        scene.oracle_categories.push_back(cat);
    }
    if (!any_damage) {
        throw Error(Errc::SwathOutsideScene, "no building falls within any damage band of the swath");
    }

    // Raster covering the lattice plus one spacing of margin on every side.
    const double ky = geom::kEarthRadiusM * std::numbers::pi / 180.0;
    const double cellsize = spec.cellsize_m / ky;
    const geom::GeoPoint ll = geom::offset_m(spec.origin, -spec.spacing_m, -spec.spacing_m, ref_lat);
    const geom::GeoPoint ur = geom::offset_m(spec.origin, (spec.grid_cols + 1) * spec.spacing_m,
                                             (spec.grid_rows + 1) * spec.spacing_m, ref_lat);
    const int ncols = static_cast<int>(std::ceil((ur.lon - ll.lon) / cellsize));
    const int nrows = static_cast<int>(std::ceil((ur.lat - ll.lat) / cellsize));
    std::vector<std::int32_t> cells(static_cast<std::size_t>(ncols) * static_cast<std::size_t>(nrows), 0);
    const raster::ClassRaster frame(ncols, nrows, ll.lon, ll.lat, cellsize, raster::kDefaultNodata,
                                    std::vector<std::int32_t>(cells.size(), 0));

    // Damaged pixels are spread evenly over the footprint's pixels in
    // row-major order; a footprint with a positive share keeps at least one.
    for (std::size_t i = 0; i < scene.footprints.size(); ++i) {
        const auto& fp = scene.footprints[i];
        const double share = damaged_share(scene.oracle_categories[i], swath_distance(centroids[i], spec), spec);
        const zonal::PixelWindow w = zonal::window_for(frame, fp.bounds());
        double carry = 0.5;
        std::int64_t damaged = 0;
        std::size_t first = cells.size();
        for (int row = w.row_lo; row <= w.row_hi; ++row) {
            for (int col = w.col_lo; col <= w.col_hi; ++col) {
                if (!geom::contains(fp, raster::pixel_center_unchecked(frame, col, row))) continue;
                const std::size_t at = static_cast<std::size_t>(row) * ncols + col;
                if (first == cells.size()) first = at;
                carry += share;
                if (carry >= 1.0) {
                    carry -= 1.0;
                    cells[at] = 2;
                    ++damaged;
                } else {
                    cells[at] = 1;
                }
            }
        }
        if (share > 0.0 && damaged == 0 && first < cells.size()) cells[first] = 2;
    }

    for (auto& cell : cells) {
        if (rng.next_unit() < spec.pixel_noise_rate) {
            cell = std::min<std::int32_t>(2, static_cast<std::int32_t>(rng.next_unit() * 3.0));
        }
    }
    scene.raster = raster::ClassRaster(ncols, nrows, ll.lon, ll.lat, cellsize, raster::kDefaultNodata,
                                       std::move(cells));

    // Ground-truth points, footprints in id order.
    std::vector<std::size_t> order(scene.footprints.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scene.footprints[a].id() < scene.footprints[b].id(); });
    for (const auto i : order) {
        const bool dropped = rng.next_unit() < spec.point_drop_rate;
        const auto [zx, zy] = gaussian_pair(rng);
        if (dropped) continue;
        const auto loc = geom::offset_m(centroids[i], spec.point_jitter_sigma_m * zx,
                                        spec.point_jitter_sigma_m * zy, ref_lat);
        scene.truth.push_back({numbered('p', i), loc, scene.oracle_categories[i]});
    }
    return scene;
}

}  // namespace bda::synth
