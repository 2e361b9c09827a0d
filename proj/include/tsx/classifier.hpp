#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsx/intervals.hpp"
#include "tsx/measures.hpp"

namespace tsx {

/// One positive weight per feature, summing to 1.
class FeatureWeights {
public:
    static constexpr double kSumTolerance = 1e-9;

    explicit FeatureWeights(std::vector<double> weights);

    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    std::span<const double> values() const noexcept { return weights_; }

private:
    std::vector<double> weights_;
};

struct Decision {
    static constexpr double kTieTolerance = 1e-12;

    ProbabilityVector fused;
    std::size_t predicted;  // index into the class list
    bool tie;
};

/// weight_f = exp(-JS_a(dist_f)) / sum_g exp(-JS_a(dist_g)).
FeatureWeights extropy_weights(std::span<const ProbabilityVector> distributions, TsallisOrder alpha);

/// fused(c) = sum_f w_f dist_f(c); argmax with lowest-index tie-break.
Decision fuse(std::span<const ProbabilityVector> distributions, const FeatureWeights& weights);

/// Every intermediate of one classification, in feature order.
struct ClassificationTrace {
    std::vector<ProbabilityVector> distributions;
    std::vector<double> extropies;
    FeatureWeights weights;
    Decision decision;
};

ClassificationTrace classify_sample_traced(const IntervalModel& model, std::span<const double> sample,
                                           SupportCoefficient gamma, TsallisOrder alpha);

Decision classify_sample(const IntervalModel& model, std::span<const double> sample, SupportCoefficient gamma,
                         TsallisOrder alpha);

struct LabeledRow {
    std::size_t id;
    std::span<const double> features;
    std::size_t label;  // index into model classes
};

struct SampleOutcome {
    std::size_t id;
    std::size_t truth;
    std::size_t predicted;
    bool tie;

    bool correct() const noexcept { return truth == predicted; }
};

struct ClassificationReport {
    double alpha;
    /// Empty where no test sample carries that class.
    std::vector<std::optional<double>> per_class_rate;
    std::vector<std::size_t> per_class_tested;
    std::vector<std::size_t> per_class_correct;
    std::size_t tested;
    std::size_t correct;
    std::size_t ties;
    double overall_rate;
    std::vector<SampleOutcome> per_sample;
};

/// Classifies every row. With `threads` > 1 the rows are split across worker
/// threads; the report is identical to the sequential one.
ClassificationReport evaluate(const IntervalModel& model, std::span<const LabeledRow> samples,
                              SupportCoefficient gamma, TsallisOrder alpha, unsigned threads = 1);

}  // namespace tsx
