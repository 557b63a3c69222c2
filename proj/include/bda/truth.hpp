#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bda/geom.hpp"
#include "bda/zonal.hpp"

namespace bda::truth {

/// FEMA building damage scale, ordered by severity.
enum class FemaCategory : int {
    NoVisibleDamage = 0,
    Affected = 1,
    MinorDamage = 2,
    MajorDamage = 3,
    Destroyed = 4,
};

inline constexpr std::array<FemaCategory, 5> kAllCategories{
    FemaCategory::NoVisibleDamage, FemaCategory::Affected, FemaCategory::MinorDamage,
    FemaCategory::MajorDamage, FemaCategory::Destroyed};

/// Lowercase snake-case names used in CSV files.
std::string_view to_string(FemaCategory c) noexcept;

/// Exact, case-sensitive match; nullopt for anything else.
std::optional<FemaCategory> parse_category(std::string_view s) noexcept;

/// Set of categories treated as the positive "damaged" class.
class BinaryScheme {
public:
    /// Throws Error(InvalidScheme) unless the set is non-empty and proper.
    explicit BinaryScheme(std::span<const FemaCategory> damaged);

    static BinaryScheme major_plus();
    static BinaryScheme destroyed_only();

    /// Accepts `major_plus`, `destroyed_only`, or a comma-separated list of
    /// category names. Throws Error(InvalidScheme | UnknownCategory).
    static BinaryScheme parse(std::string_view text);

    bool is_damaged(FemaCategory c) const noexcept { return mask_[static_cast<int>(c)]; }

    /// Preset name when the set matches one, otherwise the member names in
    /// severity order joined by commas.
    std::string name() const;

    friend bool operator==(const BinaryScheme&, const BinaryScheme&) = default;

private:
    std::array<bool, 5> mask_{};
};

int binarize(FemaCategory c, const BinaryScheme& s) noexcept;

struct GroundTruthPoint {
    std::string id;
    geom::GeoPoint location;
    FemaCategory category{FemaCategory::NoVisibleDamage};
};

inline constexpr double kDefaultRadiusM = 20.0;

struct Match {
    std::string point_id;
    std::string footprint_id;
    double distance_m{0.0};

    friend bool operator==(const Match&, const Match&) = default;
};

/// `matched` and `unmatched` both follow input point order.
struct MatchResult {
    std::vector<Match> matched;
    std::vector<std::string> unmatched;
    double ref_lat{0.0};
};

/// Mean latitude over every point and every stored vertex (closing vertex
/// included) of every footprint ring. Points come first in the summation.
double reference_latitude(std::span<const GroundTruthPoint> points,
                          std::span<const geom::Footprint> fps) noexcept;

/// Nearest footprint within radius_m, ties broken by the smallest id.
/// Throws Error(DuplicatePointId | DuplicateFootprintId), and
/// Error(InvalidSpec) for a non-positive radius.
MatchResult match_points(std::span<const GroundTruthPoint> points,
                         std::span<const geom::Footprint> fps,
                         double radius_m = kDefaultRadiusM);

/// One evaluation unit: a matched ground-truth point with its binary label
/// and the estimate of the footprint it matched.
struct MatchedSample {
    std::string point_id;
    std::string footprint_id;
    double distance_m{0.0};
    int y{0};
    double y_hat{0.0};
};

/// One sample per matched point, in match order. Several points may share a
/// footprint and therefore an estimate. Throws Error(MissingEstimate) when a
/// matched footprint has no estimate and Error(UnknownPoint) when a matched
/// point id is absent from `points`.
std::vector<MatchedSample> join_samples(const MatchResult& matches,
                                        std::span<const zonal::DamageEstimate> estimates,
                                        std::span<const GroundTruthPoint> points,
                                        const BinaryScheme& scheme);

/// Uniform grid over footprint bounding boxes. Cells are at least radius_m
/// on a side, so every footprint within radius_m of a query point is
/// registered in the 3×3 block of cells around it.
class FootprintGrid {
public:
    FootprintGrid(std::span<const geom::Footprint> fps, double radius_m, double ref_lat);

    /// Indices of footprints whose bounding box may lie within radius_m of p,
    /// sorted and unique.
    std::vector<std::size_t> candidates(const geom::GeoPoint& p) const;

private:
    struct Entry {
        std::int64_t cx;
        std::int64_t cy;
        std::size_t index;
    };

    std::int64_t cell_x(double lon) const noexcept;
    std::int64_t cell_y(double lat) const noexcept;

    double origin_lon_{0.0};
    double origin_lat_{0.0};
    double cell_lon_{1.0};
    double cell_lat_{1.0};
    double reach_lon_{0.0};
    double reach_lat_{0.0};
    std::vector<Entry> entries_;         // sorted by (cx, cy, index)
    std::vector<std::size_t> oversize_;  // spans too many cells; always a candidate
};

}  // namespace bda::truth
