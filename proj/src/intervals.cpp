#include "tsx/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "tsx/error.hpp"

namespace tsx {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* kind) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw Error(ErrorCode::Validation, std::string("duplicate ") + kind + " label '" + l + "'");
        }
    }
}

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label, const char* kind) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw Error(ErrorCode::NotFound, std::string("unknown ") + kind + " '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        std::ostringstream msg;
        msg << "invalid interval [" << lo << ", " << hi << "]";
        throw Error(ErrorCode::Validation, msg.str());
    }
}

SupportCoefficient::SupportCoefficient(double gamma) : gamma_(gamma) {
    if (!std::isfinite(gamma) || gamma <= 0.0) {
        std::ostringstream msg;
        msg << "support coefficient gamma must be finite and > 0, got " << gamma;
        throw Error(ErrorCode::Validation, msg.str());
    }
}

double interval_distance(const Interval& a, const Interval& b) {
    const double gap = a.midpoint() - b.midpoint();
    const double ha = a.half_width();
    const double hb = b.half_width();
    return std::sqrt(gap * gap + (ha * ha + hb * hb) / 3.0);
}

double interval_similarity(const Interval& a, const Interval& b, SupportCoefficient gamma) {
    return 1.0 / (1.0 + gamma.value() * interval_distance(a, b));
}

IntervalModel::IntervalModel(std::vector<std::string> classes, std::vector<std::string> features,
                             std::vector<Interval> cells)
    : classes_(std::move(classes)), features_(std::move(features)), cells_(std::move(cells)) {
    if (classes_.empty() || features_.empty()) {
        throw Error(ErrorCode::Validation, "interval model needs at least one class and one feature");
    }
    require_unique(classes_, "class");
    require_unique(features_, "feature");
    if (cells_.size() != classes_.size() * features_.size()) {
        std::ostringstream msg;
        msg << "interval grid has " << cells_.size() << " cells, expected " << classes_.size() << " x "
            << features_.size();
        throw Error(ErrorCode::Validation, msg.str());
    }
}

const Interval& IntervalModel::cell(std::size_t class_index, std::size_t feature_index) const {
    if (class_index >= classes_.size() || feature_index >= features_.size()) {
        throw Error(ErrorCode::InvalidArgument, "interval model cell index out of range");
    }
    return cells_[class_index * features_.size() + feature_index];
}

std::size_t IntervalModel::class_index(const std::string& label) const { return index_of(classes_, label, "class"); }

std::size_t IntervalModel::feature_index(const std::string& label) const {
    return index_of(features_, label, "feature");
}

ProbabilityVector feature_distribution(const IntervalModel& model, std::size_t feature_index, double value,
                                       SupportCoefficient gamma) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::Validation, "sample value must be finite");
    }
    const Interval sample = Interval::point(value);
    std::vector<double> sims(model.class_count());
    double total = 0.0;
    for (std::size_t c = 0; c < sims.size(); ++c) {
        sims[c] = interval_similarity(model.cell(c, feature_index), sample, gamma);
        total += sims[c];
    }
    if (!(total > 0.0)) {
        throw Error(ErrorCode::Validation, "total similarity is zero for feature '" +
                                               model.features()[feature_index] + "'");
    }
    for (double& s : sims) s /= total;
    return ProbabilityVector(std::move(sims));
}

ProbabilityVector feature_distribution(const IntervalModel& model, const std::string& feature, double value,
                                       SupportCoefficient gamma) {
    return feature_distribution(model, model.feature_index(feature), value, gamma);
}

IntervalModel build_interval_model(std::span<const TrainingRow> rows, std::vector<std::string> classes,
                                   std::vector<std::string> features) {
    const std::size_t nf = features.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> lo(classes.size() * nf, inf);
    std::vector<double> hi(classes.size() * nf, -inf);
    std::vector<std::size_t> counts(classes.size(), 0);

    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.features.size() != nf) {
            std::ostringstream msg;
            msg << "training row " << r << " has " << row.features.size() << " features, expected " << nf;
            throw Error(ErrorCode::Validation, msg.str());
        }
        const std::size_t c = index_of(classes, row.label, "class");
        ++counts[c];
        for (std::size_t f = 0; f < nf; ++f) {
            lo[c * nf + f] = std::min(lo[c * nf + f], row.features[f]);
            hi[c * nf + f] = std::max(hi[c * nf + f], row.features[f]);
        }
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (counts[c] == 0) {
            throw Error(ErrorCode::Validation, "no training rows for class '" + classes[c] + "'");
        }
    }

    std::vector<Interval> cells;
    cells.reserve(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) cells.emplace_back(lo[i], hi[i]);
    return IntervalModel(std::move(classes), std::move(features), std::move(cells));
}

}  // namespace tsx
