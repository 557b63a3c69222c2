#include "bda/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bda/error.hpp"

namespace bda::geom {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct Xy {
    double x;
    double y;
};

double segment_distance(Xy p, Xy a, Xy b) noexcept {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
        t = std::clamp(t, 0.0, 1.0);
    }
    const double ex = a.x + t * dx - p.x;
    const double ey = a.y + t * dy - p.y;
    return std::hypot(ex, ey);
}

}  // namespace

bool is_valid(const GeoPoint& p) noexcept {
    return std::isfinite(p.lon) && std::isfinite(p.lat) && p.lon >= -180.0 && p.lon <= 180.0 &&
           p.lat >= -90.0 && p.lat <= 90.0;
}

Ring::Ring(std::vector<GeoPoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 4) {
        throw Error(Errc::InvalidGeometry, "ring needs at least 4 vertices including closure");
    }
    if (vertices_.front() != vertices_.back()) {
        throw Error(Errc::InvalidGeometry, "ring is not closed");
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!is_valid(vertices_[i])) {
            throw Error(Errc::InvalidGeometry, "ring vertex outside lon/lat range");
        }
        if (i > 0 && vertices_[i] == vertices_[i - 1]) {
            throw Error(Errc::InvalidGeometry, "ring has repeated consecutive vertex");
        }
    }
}

Footprint::Footprint(std::string id, Ring exterior, std::vector<Ring> holes)
    : id_(std::move(id)), exterior_(std::move(exterior)), holes_(std::move(holes)) {
    if (id_.empty()) {
        throw Error(Errc::InvalidGeometry, "footprint id is empty");
    }
    if (exterior_.size() == 0) {
        throw Error(Errc::InvalidGeometry, "footprint '" + id_ + "' has no exterior ring");
    }
    bounds_ = bbox(exterior_);
    if (!(bounds_.max_lon > bounds_.min_lon) || !(bounds_.max_lat > bounds_.min_lat)) {
        throw Error(Errc::InvalidGeometry, "footprint '" + id_ + "' has a degenerate extent");
    }
}

BBox bbox(const Ring& ring) noexcept {
    BBox b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& v : ring.vertices()) {
        b.min_lon = std::min(b.min_lon, v.lon);
        b.min_lat = std::min(b.min_lat, v.lat);
        b.max_lon = std::max(b.max_lon, v.lon);
        b.max_lat = std::max(b.max_lat, v.lat);
    }
    return b;
}

BBox bbox(const Footprint& fp) noexcept { return fp.bounds(); }

bool on_boundary(const Ring& ring, const GeoPoint& p) noexcept {
    const auto v = ring.vertices();
    for (std::size_t i = 1; i < v.size(); ++i) {
        const GeoPoint& a = v[i - 1];
        const GeoPoint& b = v[i];
        if (p.lon < std::min(a.lon, b.lon) || p.lon > std::max(a.lon, b.lon) ||
            p.lat < std::min(a.lat, b.lat) || p.lat > std::max(a.lat, b.lat)) {
            continue;
        }
        const double cross = (b.lon - a.lon) * (p.lat - a.lat) - (b.lat - a.lat) * (p.lon - a.lon);
        if (cross == 0.0) {
            return true;
        }
    }
    return false;
}

bool ray_cast_inside(const Ring& ring, const GeoPoint& p) noexcept {
    const auto v = ring.vertices();
    bool inside = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const GeoPoint& a = v[i - 1];
        const GeoPoint& b = v[i];
        if ((a.lat > p.lat) != (b.lat > p.lat)) {
            const double x = a.lon + (p.lat - a.lat) * (b.lon - a.lon) / (b.lat - a.lat);
            if (p.lon < x) {
                inside = !inside;
            }
        }
    }
    return inside;
}

bool contains(const Footprint& fp, const GeoPoint& p) noexcept {
    const BBox& b = fp.bounds();
    if (p.lon < b.min_lon || p.lon > b.max_lon || p.lat < b.min_lat || p.lat > b.max_lat) {
        return false;
    }
    if (on_boundary(fp.exterior(), p)) {
        return true;
    }
    if (!ray_cast_inside(fp.exterior(), p)) {
        return false;
    }
    for (const auto& hole : fp.holes()) {
        if (on_boundary(hole, p)) {
            return true;
        }
        if (ray_cast_inside(hole, p)) {
            return false;
        }
    }
    return true;
}

double distance_m(const GeoPoint& a, const GeoPoint& b, double ref_lat) noexcept {
    const double dx = kEarthRadiusM * std::cos(ref_lat * kDegToRad) * ((b.lon - a.lon) * kDegToRad);
    const double dy = kEarthRadiusM * ((b.lat - a.lat) * kDegToRad);
    return std::sqrt(dx * dx + dy * dy);
}

double point_to_footprint_distance_m(const GeoPoint& p, const Footprint& fp,
                                     double ref_lat) noexcept {
    if (contains(fp, p)) {
        return 0.0;
    }
    // Plane coordinates relative to p keep magnitudes small.
    const double kx = kEarthRadiusM * std::cos(ref_lat * kDegToRad) * kDegToRad;
    const double ky = kEarthRadiusM * kDegToRad;
    auto project = [&](const GeoPoint& q) { return Xy{(q.lon - p.lon) * kx, (q.lat - p.lat) * ky}; };

    double best = std::numeric_limits<double>::infinity();
    auto scan = [&](const Ring& ring) {
        const auto v = ring.vertices();
        Xy prev = project(v[0]);
        for (std::size_t i = 1; i < v.size(); ++i) {
            const Xy cur = project(v[i]);
            best = std::min(best, segment_distance({0.0, 0.0}, prev, cur));
            prev = cur;
        }
    };
    scan(fp.exterior());
    for (const auto& hole : fp.holes()) {
        scan(hole);
    }
    return best;
}

double point_to_segment_distance_m(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b,
                                   double ref_lat) noexcept {
    const double kx = kEarthRadiusM * std::cos(ref_lat * kDegToRad) * kDegToRad;
    const double ky = kEarthRadiusM * kDegToRad;
    const Xy pa{(a.lon - p.lon) * kx, (a.lat - p.lat) * ky};
    const Xy pb{(b.lon - p.lon) * kx, (b.lat - p.lat) * ky};
    return segment_distance({0.0, 0.0}, pa, pb);
}

GeoPoint offset_m(const GeoPoint& origin, double east_m, double north_m, double ref_lat) noexcept {
    const double kx = kEarthRadiusM * std::cos(ref_lat * kDegToRad) * kDegToRad;
    const double ky = kEarthRadiusM * kDegToRad;
    return {origin.lon + east_m / kx, origin.lat + north_m / ky};
}

Ring rectangle(double min_lon, double min_lat, double max_lon, double max_lat) {
    return Ring({{min_lon, min_lat},
                 {max_lon, min_lat},
                 {max_lon, max_lat},
                 {min_lon, max_lat},
                 {min_lon, min_lat}});
}

}  // namespace bda::geom
