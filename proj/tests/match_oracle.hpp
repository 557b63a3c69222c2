#pragma once

#include <limits>
#include <span>

#include "bda/geom.hpp"
#include "bda/truth.hpp"

namespace bda::testing {

/// O(N·M) nearest-footprint search over every pair.
inline truth::MatchResult brute_force_match(std::span<const truth::GroundTruthPoint> points,
                                            std::span<const geom::Footprint> fps, double radius_m) {
    truth::MatchResult out;
    out.ref_lat = truth::reference_latitude(points, fps);
    for (const auto& p : points) {
        const geom::Footprint* best = nullptr;
        double best_d = std::numeric_limits<double>::infinity();
        for (const auto& fp : fps) {
            const double d = geom::point_to_footprint_distance_m(p.location, fp, out.ref_lat);
            if (best == nullptr || d < best_d || (d == best_d && fp.id() < best->id())) {
                best = &fp;
                best_d = d;
            }
        }
        if (best != nullptr && best_d <= radius_m) {
            out.matched.push_back({p.id, best->id(), best_d});
        } else {
            out.unmatched.push_back(p.id);
        }
    }
    return out;
}

}  // namespace bda::testing
