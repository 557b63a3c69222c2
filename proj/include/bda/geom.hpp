#pragma once

#include <span>
#include <string>
#include <vector>

namespace bda::geom {

/// Mean Earth radius (IUGG) used for all metric conversions.
inline constexpr double kEarthRadiusM = 6371008.8;

struct GeoPoint {
    double lon{0.0};
    double lat{0.0};

    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

bool is_valid(const GeoPoint& p) noexcept;

struct BBox {
    double min_lon{0.0};
    double min_lat{0.0};
    double max_lon{0.0};
    double max_lat{0.0};

    friend bool operator==(const BBox&, const BBox&) = default;
};

/// Closed polygon ring. The first vertex is repeated as the last one.
class Ring {
public:
    Ring() = default;

    /// Throws Error(InvalidGeometry) unless the ring is closed, has at least
    /// four vertices including closure, has no repeated consecutive vertex
    /// and all coordinates are valid lon/lat.
    explicit Ring(std::vector<GeoPoint> vertices);

    std::span<const GeoPoint> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<GeoPoint> vertices_;
};

class Footprint {
public:
    Footprint() = default;

    /// Throws Error(InvalidGeometry) for an empty id or an exterior whose
    /// bounding box has zero width or height.
    Footprint(std::string id, Ring exterior, std::vector<Ring> holes = {});

    const std::string& id() const noexcept { return id_; }
    const Ring& exterior() const noexcept { return exterior_; }
    const std::vector<Ring>& holes() const noexcept { return holes_; }
    const BBox& bounds() const noexcept { return bounds_; }

    friend bool operator==(const Footprint&, const Footprint&) = default;

private:
    std::string id_;
    Ring exterior_;
    std::vector<Ring> holes_;
    BBox bounds_;
};

/// Axis-aligned bounds of the exterior ring.
BBox bbox(const Footprint& fp) noexcept;
BBox bbox(const Ring& ring) noexcept;

bool on_boundary(const Ring& ring, const GeoPoint& p) noexcept;

/// Even-odd test with a horizontal ray toward +lon. Boundary points are
/// reported by on_boundary, not here.
bool ray_cast_inside(const Ring& ring, const GeoPoint& p) noexcept;

/// Inside the exterior and outside every hole. Any point on any ring's
/// boundary counts as inside.
bool contains(const Footprint& fp, const GeoPoint& p) noexcept;

/// Equirectangular distance at the given reference latitude.
double distance_m(const GeoPoint& a, const GeoPoint& b, double ref_lat) noexcept;

/// Zero when contains(fp, p); otherwise the smallest point-to-segment
/// distance over all rings, measured in the equirectangular plane.
double point_to_footprint_distance_m(const GeoPoint& p, const Footprint& fp,
                                     double ref_lat) noexcept;

/// Distance from p to segment ab in the equirectangular plane at ref_lat.
double point_to_segment_distance_m(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b,
                                   double ref_lat) noexcept;

/// Converts a metric offset at ref_lat into degrees.
GeoPoint offset_m(const GeoPoint& origin, double east_m, double north_m,
                  double ref_lat) noexcept;

/// Convenience: closed axis-aligned rectangle ring.
Ring rectangle(double min_lon, double min_lat, double max_lon, double max_lat);

}  // namespace bda::geom
