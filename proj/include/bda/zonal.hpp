#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bda/geom.hpp"
#include "bda/raster.hpp"

namespace bda::zonal {

/// Sub-cell grid edge used when no pixel center falls inside a footprint.
inline constexpr int kSupersample = 4;

/// Percent of a footprint's covered area classified as damaged building.
/// Background pixels inside the footprint count in the denominator; nodata
/// pixels count nowhere. When `supersampled` is set the counts are in
/// sub-cells rather than pixels.
struct DamageEstimate {
    std::string footprint_id;
    double y_hat{0.0};
    std::int64_t n_inside{0};
    std::int64_t n_damaged{0};
    bool supersampled{false};
    bool no_coverage{false};

    friend bool operator==(const DamageEstimate&, const DamageEstimate&) = default;
};

/// Inclusive pixel index window that is guaranteed to contain every pixel
/// whose center or extent intersects the box. May be empty (lo > hi).
struct PixelWindow {
    int col_lo{0};
    int col_hi{-1};
    int row_lo{0};
    int row_hi{-1};

    bool empty() const noexcept { return col_lo > col_hi || row_lo > row_hi; }
};

PixelWindow window_for(const raster::ClassRaster& r, const geom::BBox& box) noexcept;

DamageEstimate assess_footprint(const raster::ClassRaster& r, const geom::Footprint& fp);

/// One estimate per footprint, in input order. Throws
/// Error(DuplicateFootprintId). Footprints are processed on up to
/// `threads` workers (0 picks the hardware concurrency).
std::vector<DamageEstimate> assess_all(const raster::ClassRaster& r,
                                       std::span<const geom::Footprint> fps,
                                       unsigned threads = 0);

}  // namespace bda::zonal
