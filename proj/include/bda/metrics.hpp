#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bda/truth.hpp"

namespace bda::metrics {

/// Counts at one threshold. A sample is predicted damaged iff y_hat > theta.
struct ConfusionAtTheta {
    double theta{0.0};
    std::int64_t tp{0};
    std::int64_t fp{0};
    std::int64_t fn{0};

    friend bool operator==(const ConfusionAtTheta&, const ConfusionAtTheta&) = default;
};

struct PRPoint {
    double theta{0.0};
    double precision{1.0};
    double recall{0.0};
    std::int64_t tp{0};
    std::int64_t fp{0};
    std::int64_t fn{0};
};

/// Points in strictly decreasing theta; the last point has theta = 0.
struct PRCurve {
    std::vector<PRPoint> points;
};

struct ValidationReport {
    std::int64_t n_samples{0};
    std::int64_t n_positive{0};
    std::string scheme;
    double precision0{1.0};
    double recall0{0.0};
    double ap{0.0};
    PRCurve curve;
};

/// Throws Error(EmptySampleSet).
ConfusionAtTheta confusion(std::span<const truth::MatchedSample> samples, double theta);

/// Precision is 1 when nothing is predicted damaged. Throws
/// Error(NoPositiveSamples) when tp + fn = 0.
std::pair<double, double> precision_recall(const ConfusionAtTheta& c);

/// Sweeps theta over {100} ∪ unique y_hat ∪ {0} in decreasing order.
PRCurve pr_curve(std::span<const truth::MatchedSample> samples);

/// Sum over the sweep of (R_n - R_{n-1}) * P_n with R_0 = 0.
double average_precision(const PRCurve& curve) noexcept;

ValidationReport validate(std::span<const truth::MatchedSample> samples, std::string scheme);

}  // namespace bda::metrics
