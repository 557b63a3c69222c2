#pragma once

#include "bda/geom.hpp"
#include "bda/raster.hpp"
#include "bda/zonal.hpp"

namespace bda::testing {

/// Tests every pixel of the raster with no bounding-box pruning, then every
/// sub-cell of every pixel when no center was inside.
inline zonal::DamageEstimate brute_force_assess(const raster::ClassRaster& r, const geom::Footprint& fp) {
    zonal::DamageEstimate e;
    e.footprint_id = fp.id();
    for (int row = 0; row < r.nrows(); ++row) {
        for (int col = 0; col < r.ncols(); ++col) {
            const auto code = r.at(col, row);
            if (code != r.nodata() && geom::contains(fp, raster::pixel_center(r, col, row))) {
                ++e.n_inside;
                e.n_damaged += code == 2;
            }
        }
    }
    if (e.n_inside == 0) {
        e.supersampled = true;
        for (int row = 0; row < r.nrows(); ++row) {
            for (int col = 0; col < r.ncols(); ++col) {
                const auto code = r.at(col, row);
                if (code == r.nodata()) continue;
                for (int j = 0; j < 4; ++j) {
                    for (int i = 0; i < 4; ++i) {
                        if (geom::contains(fp, raster::subcell_center(r, col, row, i, j, 4))) {
                            ++e.n_inside;
                            e.n_damaged += code == 2;
                        }
                    }
                }
            }
        }
    }
    if (e.n_inside == 0) {
        e.no_coverage = true;
    } else {
        e.y_hat = 100.0 * static_cast<double>(e.n_damaged) / static_cast<double>(e.n_inside);
    }
    return e;
}

}  // namespace bda::testing
