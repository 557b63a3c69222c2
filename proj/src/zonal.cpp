#include "bda/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_set>

#include "bda/error.hpp"

namespace bda::zonal {

namespace {

constexpr std::int32_t kDamaged = static_cast<std::int32_t>(raster::PixelClass::DamagedBuilding);

int clamp_index(double v, int hi) noexcept {
    if (!(v > 0.0)) return 0;  // also catches NaN
    if (v > hi) return hi;
    return static_cast<int>(v);
}

}  // namespace

PixelWindow window_for(const raster::ClassRaster& r, const geom::BBox& box) noexcept {
    const double cs = r.cellsize();
    // Padded by one pixel on each side so rounding in the index arithmetic
    // never drops a candidate; containment makes the final call.
    const double c_lo = std::floor((box.min_lon - r.xll()) / cs - 0.5) - 1.0;
    const double c_hi = std::ceil((box.max_lon - r.xll()) / cs - 0.5) + 1.0;
    const double r_lo = std::floor(r.nrows() - 0.5 - (box.max_lat - r.yll()) / cs) - 1.0;
    const double r_hi = std::ceil(r.nrows() - 0.5 - (box.min_lat - r.yll()) / cs) + 1.0;
    if (c_hi < 0.0 || r_hi < 0.0 || c_lo > r.ncols() - 1 || r_lo > r.nrows() - 1) {
        return {};
    }
    return {clamp_index(c_lo, r.ncols() - 1), clamp_index(c_hi, r.ncols() - 1),
            clamp_index(r_lo, r.nrows() - 1), clamp_index(r_hi, r.nrows() - 1)};
}

DamageEstimate assess_footprint(const raster::ClassRaster& r, const geom::Footprint& fp) {
    DamageEstimate est;
    est.footprint_id = fp.id();
    const PixelWindow w = window_for(r, fp.bounds());
    if (w.empty()) {
        est.supersampled = true;
        est.no_coverage = true;
        return est;
    }

    for (int row = w.row_lo; row <= w.row_hi; ++row) {
        for (int col = w.col_lo; col <= w.col_hi; ++col) {
            const std::int32_t code = r.at_unchecked(col, row);
            if (code == r.nodata()) continue;
            if (!geom::contains(fp, raster::pixel_center_unchecked(r, col, row))) continue;
            ++est.n_inside;
            if (code == kDamaged) ++est.n_damaged;
        }
    }

    if (est.n_inside == 0) {
        est.supersampled = true;
        for (int row = w.row_lo; row <= w.row_hi; ++row) {
            for (int col = w.col_lo; col <= w.col_hi; ++col) {
                const std::int32_t code = r.at_unchecked(col, row);
                if (code == r.nodata()) continue;
                for (int j = 0; j < kSupersample; ++j) {
                    for (int i = 0; i < kSupersample; ++i) {
                        if (!geom::contains(fp, raster::subcell_center(r, col, row, i, j, kSupersample))) {
                            continue;
                        }
                        ++est.n_inside;
                        if (code == kDamaged) ++est.n_damaged;
                    }
                }
            }
        }
    }

    if (est.n_inside == 0) {
        est.no_coverage = true;
        return est;
    }
    est.y_hat = 100.0 * static_cast<double>(est.n_damaged) / static_cast<double>(est.n_inside);
    return est;
}

std::vector<DamageEstimate> assess_all(const raster::ClassRaster& r,
                                       std::span<const geom::Footprint> fps, unsigned threads) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(fps.size());
    for (const auto& fp : fps) {
        if (!seen.insert(fp.id()).second) {
            throw Error(Errc::DuplicateFootprintId, "duplicate footprint id '" + fp.id() + "'");
        }
    }

    std::vector<DamageEstimate> out(fps.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, fps.size() / 64)));

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = assess_footprint(r, fps[i]);
    };
    if (threads <= 1) {
        work(0, fps.size());
        return out;
    }
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (fps.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < fps.size(); begin += chunk) {
            pool.emplace_back(work, begin, std::min(fps.size(), begin + chunk));
        }
    }
    return out;
}

}  // namespace bda::zonal
