#include "tsx/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "tsx/error.hpp"

namespace tsx {

FeatureWeights::FeatureWeights(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error(ErrorCode::Validation, "feature weights must not be empty");
    double sum = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        // A lone feature legitimately carries weight 1.
        if (!(weights_[i] > 0.0 && weights_[i] <= 1.0)) {
            std::ostringstream msg;
            msg << "feature weight w[" << i << "] = " << weights_[i] << " is outside (0, 1]";
            throw Error(ErrorCode::Validation, msg.str());
        }
        sum += weights_[i];
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "feature weights sum to " << sum << ", expected 1 within " << kSumTolerance;
        throw Error(ErrorCode::Validation, msg.str());
    }
}

FeatureWeights extropy_weights(std::span<const ProbabilityVector> distributions, TsallisOrder alpha) {
    if (distributions.empty()) throw Error(ErrorCode::InvalidArgument, "extropy_weights needs >= 1 distribution");
    const std::size_t classes = distributions.front().size();
    std::vector<double> js(distributions.size());
    for (std::size_t f = 0; f < distributions.size(); ++f) {
        if (distributions[f].size() != classes) {
            throw Error(ErrorCode::InvalidArgument, "distributions are over different class counts");
        }
        js[f] = tsallis_extropy(distributions[f], alpha);
    }
    // exp(-x) normalization is shift invariant; subtracting the minimum keeps exp() in range.
    const double shift = *std::min_element(js.begin(), js.end());
    double total = 0.0;
    for (double& v : js) {
        v = std::exp(-(v - shift));
        total += v;
    }
    for (double& v : js) v /= total;
    return FeatureWeights(std::move(js));
}

Decision fuse(std::span<const ProbabilityVector> distributions, const FeatureWeights& weights) {
    if (distributions.empty()) throw Error(ErrorCode::InvalidArgument, "fuse needs >= 1 distribution");
    if (distributions.size() != weights.size()) {
        std::ostringstream msg;
        msg << "fuse: " << distributions.size() << " distributions but " << weights.size() << " weights";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    const std::size_t classes = distributions.front().size();
    std::vector<double> fused(classes, 0.0);
    for (std::size_t f = 0; f < distributions.size(); ++f) {
        if (distributions[f].size() != classes) {
            throw Error(ErrorCode::InvalidArgument, "fuse: distributions are over different class counts");
        }
        for (std::size_t c = 0; c < classes; ++c) fused[c] += weights[f] * distributions[f][c];
    }

    const auto best = std::max_element(fused.begin(), fused.end());
    const double top = *best;
    const std::size_t near_top = static_cast<std::size_t>(std::count_if(
        fused.begin(), fused.end(), [top](double v) { return top - v <= Decision::kTieTolerance; }));
    const std::size_t predicted = static_cast<std::size_t>(
        std::find_if(fused.begin(), fused.end(), [top](double v) { return top - v <= Decision::kTieTolerance; }) -
        fused.begin());
    return Decision{ProbabilityVector(std::move(fused)), predicted, near_top > 1};
}

ClassificationTrace classify_sample_traced(const IntervalModel& model, std::span<const double> sample,
                                           SupportCoefficient gamma, TsallisOrder alpha) {
    if (sample.size() != model.feature_count()) {
        std::ostringstream msg;
        msg << "sample has " << sample.size() << " values, model expects " << model.feature_count();
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    std::vector<ProbabilityVector> dists;
    dists.reserve(sample.size());
    std::vector<double> extropies;
    extropies.reserve(sample.size());
    for (std::size_t f = 0; f < sample.size(); ++f) {
        dists.push_back(feature_distribution(model, f, sample[f], gamma));
        extropies.push_back(tsallis_extropy(dists.back(), alpha));
    }
    FeatureWeights weights = extropy_weights(dists, alpha);
    Decision decision = fuse(dists, weights);
    return ClassificationTrace{std::move(dists), std::move(extropies), std::move(weights), std::move(decision)};
}

Decision classify_sample(const IntervalModel& model, std::span<const double> sample, SupportCoefficient gamma,
                         TsallisOrder alpha) {
    return classify_sample_traced(model, sample, gamma, alpha).decision;
}

ClassificationReport evaluate(const IntervalModel& model, std::span<const LabeledRow> samples,
                              SupportCoefficient gamma, TsallisOrder alpha, unsigned threads) {
    if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "evaluate needs a non-empty sample list");
    for (const auto& s : samples) {
        if (s.label >= model.class_count()) {
            throw Error(ErrorCode::InvalidArgument,
                        "sample " + std::to_string(s.id) + " has a label outside the model classes");
        }
    }

    std::vector<SampleOutcome> outcomes(samples.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Decision d = classify_sample(model, samples[i].features, gamma, alpha);
            outcomes[i] = SampleOutcome{samples[i].id, samples[i].label, d.predicted, d.tie};
        }
    };
    threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(samples.size()));
    if (threads == 1) {
        work(0, samples.size());
    } else {
        // Each worker owns a disjoint slice of `outcomes`; an exception in any
        // worker is rethrown after all have joined.
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (samples.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t begin = std::min(samples.size(), t * chunk);
                const std::size_t end = std::min(samples.size(), begin + chunk);
                pool.emplace_back([&, t, begin, end] {
                    try {
                        work(begin, end);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    ClassificationReport report;
    report.alpha = alpha.value();
    report.per_class_tested.assign(model.class_count(), 0);
    report.per_class_correct.assign(model.class_count(), 0);
    report.tested = outcomes.size();
    report.correct = 0;
    report.ties = 0;
    for (const auto& o : outcomes) {
        ++report.per_class_tested[o.truth];
        if (o.correct()) {
            ++report.per_class_correct[o.truth];
            ++report.correct;
        }
        if (o.tie) ++report.ties;
    }
    report.per_class_rate.resize(model.class_count());
    for (std::size_t c = 0; c < model.class_count(); ++c) {
        if (report.per_class_tested[c] > 0) {
            report.per_class_rate[c] =
                static_cast<double>(report.per_class_correct[c]) / static_cast<double>(report.per_class_tested[c]);
        }
    }
    report.overall_rate = static_cast<double>(report.correct) / static_cast<double>(report.tested);
    report.per_sample = std::move(outcomes);
    return report;
}

}  // namespace tsx
