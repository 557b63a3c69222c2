#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bda/geom.hpp"
#include "bda/raster.hpp"
#include "bda/truth.hpp"

namespace bda::synth {

/// SplitMix64 step: returns (new state, output).
std::pair<std::uint64_t, std::uint64_t> prng_next(std::uint64_t state) noexcept;

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        const auto [state, out] = prng_next(state_);
        state_ = state;
        return out;
    }

    /// (output + 0.5) / 2^64, evaluated in double precision.
    double next_unit() noexcept;

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Two standard normal deviates from exactly two draws (Box-Muller).
std::pair<double, double> gaussian_pair(SplitMix64& rng) noexcept;

struct SceneSpec {
    std::uint64_t seed{42};
    int grid_cols{30};
    int grid_rows{30};
    double building_size_m{12.0};
    double spacing_m{30.0};
    geom::GeoPoint origin{-90.885, 32.9};  // south-west corner of the building lattice
    geom::GeoPoint swath_start{-90.8861, 32.9024};
    geom::GeoPoint swath_end{-90.8743, 32.9057};
    double swath_width_m{100.0};
    double cellsize_m{1.0};
    double pixel_noise_rate{0.0};
    double point_jitter_sigma_m{0.0};
    double point_drop_rate{0.0};
    /// Share of a major-damage footprint's pixels rendered as damaged,
    /// falling linearly from `major_fraction_inner` at d = w/2 to
    /// `major_fraction_outer` at d = w. The defaults render major damage
    /// exactly like destruction.
    double major_fraction_inner{1.0};
    double major_fraction_outer{1.0};
};

/// Throws Error(InvalidSpec) naming the first offending field.
void check(const SceneSpec& spec);

struct SynthScene {
    std::vector<geom::Footprint> footprints;
    raster::ClassRaster raster;
    std::vector<truth::GroundTruthPoint> truth;
    /// Parallel to `footprints`.
    std::vector<truth::FemaCategory> oracle_categories;
};

/// Damage band from the centroid's distance d to the swath centerline:
/// d <= w/2 destroyed, <= w major, <= 1.5w minor, <= 2w affected.
truth::FemaCategory category_from_swath(const geom::GeoPoint& centroid, const SceneSpec& spec) noexcept;

/// Rendered damaged share for a footprint of the given category whose
/// centroid lies d meters from the swath centerline.
double damaged_share(truth::FemaCategory c, double d, const SceneSpec& spec) noexcept;

/// Deterministic scene. PRNG draws are consumed in this order: building
/// jitter (row-major, x then y), one noise draw per pixel row-major plus a
/// class draw for each flipped pixel, then per footprint in id order a drop
/// draw and two jitter draws (consumed even for dropped points).
/// Throws Error(InvalidSpec | SwathOutsideScene).
SynthScene generate(const SceneSpec& spec);

}  // namespace bda::synth
