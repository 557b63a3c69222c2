#include "bda/truth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <unordered_set>

#include "bda/error.hpp"

namespace bda::truth {

namespace {

constexpr std::array<std::string_view, 5> kNames{"no_visible_damage", "affected", "minor_damage",
                                                 "major_damage", "destroyed"};

// Footprints whose bounding box covers more cells than this skip the grid.
constexpr std::int64_t kMaxCellsPerFootprint = 4096;

template <typename T, typename IdFn>
void require_unique(std::span<const T> items, IdFn id, Errc code, std::string_view what) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(items.size());
    for (const auto& item : items) {
        if (!seen.insert(id(item)).second) {
            throw Error(code, "duplicate " + std::string(what) + " id '" + std::string(id(item)) + "'");
        }
    }
}

}  // namespace

std::string_view to_string(FemaCategory c) noexcept { return kNames[static_cast<int>(c)]; }

std::optional<FemaCategory> parse_category(std::string_view s) noexcept {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (s == kNames[i]) return static_cast<FemaCategory>(i);
    }
    return std::nullopt;
}

BinaryScheme::BinaryScheme(std::span<const FemaCategory> damaged) {
    for (auto c : damaged) mask_[static_cast<int>(c)] = true;
    const auto n = std::count(mask_.begin(), mask_.end(), true);
    if (n == 0 || n == static_cast<long>(mask_.size())) {
        throw Error(Errc::InvalidScheme, "damaged set must be a non-empty proper subset");
    }
}

BinaryScheme BinaryScheme::major_plus() {
    constexpr std::array set{FemaCategory::MajorDamage, FemaCategory::Destroyed};
    return BinaryScheme(set);
}

BinaryScheme BinaryScheme::destroyed_only() {
    constexpr std::array set{FemaCategory::Destroyed};
    return BinaryScheme(set);
}

BinaryScheme BinaryScheme::parse(std::string_view text) {
    if (text == "major_plus") return major_plus();
    if (text == "destroyed_only") return destroyed_only();
    std::vector<FemaCategory> set;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = std::min(text.find(',', start), text.size());
        const auto item = text.substr(start, pos - start);
        const auto cat = parse_category(item);
        if (!cat) {
            throw Error(Errc::UnknownCategory, "unknown damage category '" + std::string(item) + "'");
        }
        set.push_back(*cat);
        start = pos + 1;
    }
    return BinaryScheme(set);
}

std::string BinaryScheme::name() const {
    if (*this == major_plus()) return "major_plus";
    if (*this == destroyed_only()) return "destroyed_only";
    std::string out;
    for (auto c : kAllCategories) {
        if (!is_damaged(c)) continue;
        if (!out.empty()) out += ',';
        out += to_string(c);
    }
    return out;
}

int binarize(FemaCategory c, const BinaryScheme& s) noexcept { return s.is_damaged(c) ? 1 : 0; }

double reference_latitude(std::span<const GroundTruthPoint> points,
                          std::span<const geom::Footprint> fps) noexcept {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& p : points) {
        sum += p.location.lat;
        ++n;
    }
    auto add_ring = [&](const geom::Ring& ring) {
        for (const auto& v : ring.vertices()) {
            sum += v.lat;
            ++n;
        }
    };
    for (const auto& fp : fps) {
        add_ring(fp.exterior());
        for (const auto& h : fp.holes()) add_ring(h);
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

FootprintGrid::FootprintGrid(std::span<const geom::Footprint> fps, double radius_m, double ref_lat) {
    constexpr double kDegToRad = std::numbers::pi / 180.0;
    const double kx = geom::kEarthRadiusM * std::cos(ref_lat * kDegToRad) * kDegToRad;
    const double ky = geom::kEarthRadiusM * kDegToRad;
    cell_lon_ = radius_m / std::max(kx, 1e-9);
    cell_lat_ = radius_m / ky;
    // Slightly more than one radius so rounding cannot exclude a cell.
    reach_lon_ = cell_lon_ * (1.0 + 1e-6);
    reach_lat_ = cell_lat_ * (1.0 + 1e-6);
    if (!fps.empty()) {
        origin_lon_ = fps.front().bounds().min_lon;
        origin_lat_ = fps.front().bounds().min_lat;
    }
    for (std::size_t i = 0; i < fps.size(); ++i) {
        const geom::BBox& b = fps[i].bounds();
        const auto x0 = cell_x(b.min_lon), x1 = cell_x(b.max_lon);
        const auto y0 = cell_y(b.min_lat), y1 = cell_y(b.max_lat);
        if ((x1 - x0 + 1) * (y1 - y0 + 1) > kMaxCellsPerFootprint) {
            oversize_.push_back(i);
            continue;
        }
        for (auto cx = x0; cx <= x1; ++cx) {
            for (auto cy = y0; cy <= y1; ++cy) entries_.push_back({cx, cy, i});
        }
    }
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.cx, a.cy, a.index) < std::tie(b.cx, b.cy, b.index);
    });
}

std::int64_t FootprintGrid::cell_x(double lon) const noexcept {
    return static_cast<std::int64_t>(std::floor((lon - origin_lon_) / cell_lon_));
}

std::int64_t FootprintGrid::cell_y(double lat) const noexcept {
    return static_cast<std::int64_t>(std::floor((lat - origin_lat_) / cell_lat_));
}

std::vector<std::size_t> FootprintGrid::candidates(const geom::GeoPoint& p) const {
    std::vector<std::size_t> out(oversize_);
    const auto x0 = cell_x(p.lon - reach_lon_), x1 = cell_x(p.lon + reach_lon_);
    const auto y0 = cell_y(p.lat - reach_lat_), y1 = cell_y(p.lat + reach_lat_);
    for (auto cx = x0; cx <= x1; ++cx) {
        const auto lo = std::lower_bound(entries_.begin(), entries_.end(), std::pair{cx, y0},
                                         [](const Entry& e, const std::pair<std::int64_t, std::int64_t>& k) {
                                             return std::tie(e.cx, e.cy) < std::tie(k.first, k.second);
                                         });
        for (auto it = lo; it != entries_.end() && it->cx == cx && it->cy <= y1; ++it) {
            out.push_back(it->index);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MatchResult match_points(std::span<const GroundTruthPoint> points,
                         std::span<const geom::Footprint> fps, double radius_m) {
    if (!(radius_m > 0.0) || !std::isfinite(radius_m)) {
        throw Error(Errc::InvalidSpec, "match radius must be positive");
    }
    require_unique(points, [](const GroundTruthPoint& p) -> std::string_view { return p.id; },
                   Errc::DuplicatePointId, "point");
    require_unique(fps, [](const geom::Footprint& f) -> std::string_view { return f.id(); },
                   Errc::DuplicateFootprintId, "footprint");

    MatchResult result;
    result.ref_lat = reference_latitude(points, fps);
    const FootprintGrid grid(fps, radius_m, result.ref_lat);

    for (const auto& p : points) {
        const geom::Footprint* best = nullptr;
        double best_d = std::numeric_limits<double>::infinity();
        for (const auto idx : grid.candidates(p.location)) {
            const auto& fp = fps[idx];
            const double d = geom::point_to_footprint_distance_m(p.location, fp, result.ref_lat);
            if (d < best_d || (d == best_d && best != nullptr && fp.id() < best->id())) {
                best = &fp;
                best_d = d;
            }
        }
        if (best != nullptr && best_d <= radius_m) {
            result.matched.push_back({p.id, best->id(), best_d});
        } else {
            result.unmatched.push_back(p.id);
        }
    }
    return result;
}

std::vector<MatchedSample> join_samples(const MatchResult& matches,
                                        std::span<const zonal::DamageEstimate> estimates,
                                        std::span<const GroundTruthPoint> points,
                                        const BinaryScheme& scheme) {
    std::unordered_map<std::string_view, const zonal::DamageEstimate*> by_fp;
    by_fp.reserve(estimates.size());
    for (const auto& e : estimates) by_fp.emplace(e.footprint_id, &e);
    std::unordered_map<std::string_view, const GroundTruthPoint*> by_point;
    by_point.reserve(points.size());
    for (const auto& p : points) by_point.emplace(p.id, &p);

    std::vector<MatchedSample> out;
    out.reserve(matches.matched.size());
    for (const auto& m : matches.matched) {
        const auto e = by_fp.find(m.footprint_id);
        if (e == by_fp.end()) {
            throw Error(Errc::MissingEstimate, "no damage estimate for footprint '" + m.footprint_id + "'");
        }
        const auto p = by_point.find(m.point_id);
        if (p == by_point.end()) {
            throw Error(Errc::UnknownPoint, "matched point '" + m.point_id + "' not among ground-truth points");
        }
        out.push_back({m.point_id, m.footprint_id, m.distance_m, binarize(p->second->category, scheme),
                       e->second->y_hat});
    }
    return out;
}

}  // namespace bda::truth
