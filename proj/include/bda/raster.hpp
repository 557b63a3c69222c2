#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bda/geom.hpp"

namespace bda::raster {

/// Pixel class codes produced by the upstream segmentation model.
enum class PixelClass : std::int32_t {
    Background = 0,
    Building = 1,
    DamagedBuilding = 2,
};

inline constexpr std::int32_t kDefaultNodata = -1;

/// Georeferenced grid of class codes. Row 0 is the northernmost row and
/// cells are stored row-major.
class ClassRaster {
public:
    ClassRaster() = default;

    /// Validates dimensions, cellsize and every cell code; throws
    /// Error(InvalidHeaderValue | CellCountMismatch | InvalidClassCode).
    ClassRaster(int ncols, int nrows, double xll, double yll, double cellsize,
                std::int32_t nodata, std::vector<std::int32_t> cells);

    int ncols() const noexcept { return ncols_; }
    int nrows() const noexcept { return nrows_; }
    double xll() const noexcept { return xll_; }
    double yll() const noexcept { return yll_; }
    double cellsize() const noexcept { return cellsize_; }
    std::int32_t nodata() const noexcept { return nodata_; }
    const std::vector<std::int32_t>& cells() const noexcept { return cells_; }

    std::int32_t at(int col, int row) const;
    std::int32_t at_unchecked(int col, int row) const noexcept {
        return cells_[static_cast<std::size_t>(row) * static_cast<std::size_t>(ncols_) +
                      static_cast<std::size_t>(col)];
    }

    /// Geographic extent of the whole grid.
    geom::BBox bounds() const noexcept;

    friend bool operator==(const ClassRaster&, const ClassRaster&) = default;

private:
    int ncols_{0};
    int nrows_{0};
    double xll_{0.0};
    double yll_{0.0};
    double cellsize_{1.0};
    std::int32_t nodata_{kDefaultNodata};
    std::vector<std::int32_t> cells_;
};

bool is_class_code(std::int32_t code) noexcept;

/// Center of pixel (col, row); throws Error(IndexOutOfRange).
geom::GeoPoint pixel_center(const ClassRaster& r, int col, int row);

inline geom::GeoPoint pixel_center_unchecked(const ClassRaster& r, int col, int row) noexcept {
    return {r.xll() + (col + 0.5) * r.cellsize(), r.yll() + (r.nrows() - row - 0.5) * r.cellsize()};
}

/// Center of sub-cell (i, j) of an n×n subdivision of pixel (col, row).
/// i runs west to east, j south to north.
inline geom::GeoPoint subcell_center(const ClassRaster& r, int col, int row, int i, int j,
                                     int n) noexcept {
    const double fx = (i + 0.5) / n;
    const double fy = (j + 0.5) / n;
    return {r.xll() + (col + fx) * r.cellsize(), r.yll() + (r.nrows() - row - 1 + fy) * r.cellsize()};
}

/// Parses an Esri ASCII grid. Header keys are case-insensitive and must come
/// in the order ncols, nrows, xllcorner, yllcorner, cellsize, [nodata_value].
/// Error messages carry a 1-based line number.
ClassRaster parse_ascii_grid(std::string_view text);

/// Emits lowercase header keys, then one LF-terminated line per row.
std::string write_ascii_grid(const ClassRaster& r);

}  // namespace bda::raster
