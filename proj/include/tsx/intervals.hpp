#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tsx/measures.hpp"

namespace tsx {

/// Closed interval [lo, hi] with finite ends.
class Interval {
public:
    Interval(double lo, double hi);
    static Interval point(double v) { return Interval(v, v); }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double midpoint() const noexcept { return 0.5 * (lo_ + hi_); }
    double half_width() const noexcept { return 0.5 * (hi_ - lo_); }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
};

/// Positive coefficient sharpening the similarity 1 / (1 + gamma D).
class SupportCoefficient {
public:
    static constexpr double kDefault = 5.0;

    explicit SupportCoefficient(double gamma = kDefault);
    double value() const noexcept { return gamma_; }

private:
    double gamma_;
};

/// Distance between intervals: squared midpoint gap plus a third of the
/// summed squared half-widths. Not a metric: D(A, A) > 0 unless A is a point.
double interval_distance(const Interval& a, const Interval& b);

double interval_similarity(const Interval& a, const Interval& b, SupportCoefficient gamma);

/// Per-class, per-feature interval table.
class IntervalModel {
public:
    /// `cells` is row-major over classes: cells[c * features.size() + f].
    IntervalModel(std::vector<std::string> classes, std::vector<std::string> features,
                  std::vector<Interval> cells);

    const std::vector<std::string>& classes() const noexcept { return classes_; }
    const std::vector<std::string>& features() const noexcept { return features_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    std::size_t feature_count() const noexcept { return features_.size(); }

    const Interval& cell(std::size_t class_index, std::size_t feature_index) const;
    std::size_t class_index(const std::string& label) const;
    std::size_t feature_index(const std::string& label) const;

    friend bool operator==(const IntervalModel&, const IntervalModel&) = default;

private:
    std::vector<std::string> classes_;
    std::vector<std::string> features_;
    std::vector<Interval> cells_;
};

/// Normalized similarities of the point [value, value] to every class
/// interval of one feature, in model class order.
ProbabilityVector feature_distribution(const IntervalModel& model, std::size_t feature_index, double value,
                                       SupportCoefficient gamma);
ProbabilityVector feature_distribution(const IntervalModel& model, const std::string& feature, double value,
                                       SupportCoefficient gamma);

struct TrainingRow {
    std::span<const double> features;
    std::string label;
};

/// Cell (c, f) = [min, max] of feature f over the rows labelled c.
/// Every class must have at least one row and every row all features.
IntervalModel build_interval_model(std::span<const TrainingRow> rows, std::vector<std::string> classes,
                                   std::vector<std::string> features);

}  // namespace tsx
