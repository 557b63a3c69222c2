#include "bda/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "bda/error.hpp"

namespace bda::metrics {

ConfusionAtTheta confusion(std::span<const truth::MatchedSample> samples, double theta) {
    if (samples.empty()) {
        throw Error(Errc::EmptySampleSet, "no matched samples to evaluate");
    }
    ConfusionAtTheta c{theta, 0, 0, 0};
    for (const auto& s : samples) {
        const bool predicted = s.y_hat > theta;
        if (predicted && s.y == 1) ++c.tp;
        if (predicted && s.y == 0) ++c.fp;
        if (!predicted && s.y == 1) ++c.fn;
    }
    return c;
}

std::pair<double, double> precision_recall(const ConfusionAtTheta& c) {
    if (c.tp + c.fn == 0) {
        throw Error(Errc::NoPositiveSamples, "no positive samples under the chosen scheme");
    }
    const double precision =
        c.tp + c.fp == 0 ? 1.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    const double recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    return {precision, recall};
}

PRCurve pr_curve(std::span<const truth::MatchedSample> samples) {
    if (samples.empty()) {
        throw Error(Errc::EmptySampleSet, "no matched samples to evaluate");
    }
    std::vector<std::pair<double, int>> ranked;
    ranked.reserve(samples.size());
    std::int64_t positives = 0;
    for (const auto& s : samples) {
        if (!(s.y_hat >= 0.0 && s.y_hat <= 100.0)) {
            throw Error(Errc::ParseError, "damage estimate for '" + s.point_id + "' outside [0, 100]");
        }
        ranked.emplace_back(s.y_hat, s.y);
        positives += s.y;
    }
    if (positives == 0) {
        throw Error(Errc::NoPositiveSamples, "no positive samples under the chosen scheme");
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<double> thresholds{100.0};
    for (const auto& [y_hat, y] : ranked) {
        if (y_hat < thresholds.back()) thresholds.push_back(y_hat);
    }
    if (thresholds.back() > 0.0) thresholds.push_back(0.0);

    PRCurve curve;
    curve.points.reserve(thresholds.size());
    std::size_t next = 0;
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    for (const double theta : thresholds) {
        while (next < ranked.size() && ranked[next].first > theta) {
            (ranked[next].second == 1 ? tp : fp) += 1;
            ++next;
        }
        const ConfusionAtTheta c{theta, tp, fp, positives - tp};
        const auto [precision, recall] = precision_recall(c);
        assert(curve.points.empty() || recall >= curve.points.back().recall);
        curve.points.push_back({theta, precision, recall, c.tp, c.fp, c.fn});
    }
    return curve;
}

double average_precision(const PRCurve& curve) noexcept {
    double ap = 0.0;
    double prev_recall = 0.0;
    for (const auto& p : curve.points) {
        ap += (p.recall - prev_recall) * p.precision;
        prev_recall = p.recall;
    }
    return ap;
}

ValidationReport validate(std::span<const truth::MatchedSample> samples, std::string scheme) {
    ValidationReport report;
    report.curve = pr_curve(samples);
    report.scheme = std::move(scheme);
    report.n_samples = static_cast<std::int64_t>(samples.size());
    const PRPoint& at_zero = report.curve.points.back();
    report.n_positive = at_zero.tp + at_zero.fn;
    report.precision0 = at_zero.precision;
    report.recall0 = at_zero.recall;
    report.ap = average_precision(report.curve);
    return report;
}

}  // namespace bda::metrics
