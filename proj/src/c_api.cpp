#include "tsx/tsx.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "tsx/classifier.hpp"
#include "tsx/dataset.hpp"
#include "tsx/error.hpp"
#include "tsx/intervals.hpp"
#include "tsx/measures.hpp"
#include "tsx/model_io.hpp"
#include "tsx/verification.hpp"

struct tsx_model {
    tsx::IntervalModel model;
};

struct tsx_dataset {
    std::vector<tsx::iris::LabeledSample> samples;
    std::string warning;
};

struct tsx_report {
    tsx::ClassificationReport report;
};

struct tsx_sweep {
    std::vector<tsx::PropertyCheck> checks;
};

namespace {

thread_local std::string g_last_error;

tsx_status fail(tsx_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

tsx_status to_status(tsx::ErrorCode code) {
    switch (code) {
        case tsx::ErrorCode::Validation: return TSX_ERR_VALIDATION;
        case tsx::ErrorCode::InvalidArgument: return TSX_ERR_INVALID_ARGUMENT;
        case tsx::ErrorCode::NotFound: return TSX_ERR_NOT_FOUND;
        case tsx::ErrorCode::Io: return TSX_ERR_IO;
        case tsx::ErrorCode::Parse: return TSX_ERR_PARSE;
    }
    return TSX_ERR_INTERNAL;
}

// Runs `body`, translating every exception into a status code.
template <typename F>
tsx_status guarded(F&& body) noexcept {
    try {
        body();
        return TSX_OK;
    } catch (const tsx::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(TSX_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TSX_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TSX_ERR_INTERNAL, "unknown error");
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw tsx::Error(tsx::ErrorCode::InvalidArgument, what);
}

tsx::ProbabilityVector to_distribution(const double* p, std::size_t n) {
    require(p != nullptr || n == 0, "null probability pointer");
    return tsx::ProbabilityVector(std::vector<double>(p, p + n));
}

std::vector<tsx::ProbabilityVector> to_distributions(const double* rows, std::size_t n_features,
                                                     std::size_t n_classes) {
    require(rows != nullptr, "null distributions pointer");
    std::vector<tsx::ProbabilityVector> out;
    out.reserve(n_features);
    for (std::size_t f = 0; f < n_features; ++f) out.push_back(to_distribution(rows + f * n_classes, n_classes));
    return out;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tsx_sample to_c(const tsx::iris::LabeledSample& s) {
    tsx_sample out{};
    out.id = s.id;
    for (std::size_t f = 0; f < tsx::iris::kFeatureCount; ++f) out.features[f] = s.features[f];
    out.label = static_cast<tsx_species>(s.label);
    return out;
}

const std::vector<double> kDefaultSweepAlphas = tsx::SweepConfig{}.alphas;

}  // namespace

extern "C" {

const char* tsx_last_error(void) { return g_last_error.c_str(); }

const char* tsx_version(void) { return TSX_VERSION_STRING; }

void tsx_string_free(char* s) { delete[] s; }

tsx_status tsx_shannon_entropy(const double* p, size_t n, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::shannon_entropy(to_distribution(p, n));
    });
}

tsx_status tsx_extropy(const double* p, size_t n, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::extropy(to_distribution(p, n));
    });
}

tsx_status tsx_tsallis_entropy(const double* p, size_t n, double alpha, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::tsallis_entropy(to_distribution(p, n), tsx::TsallisOrder(alpha));
    });
}

tsx_status tsx_tsallis_extropy(const double* p, size_t n, double alpha, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::tsallis_extropy(to_distribution(p, n), tsx::TsallisOrder(alpha));
    });
}

tsx_status tsx_binary_tsallis(double p, double alpha, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::binary_tsallis(p, tsx::TsallisOrder(alpha));
    });
}

tsx_status tsx_sum_identity_gap(const double* p, size_t n, double alpha, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::sum_identity_gap(to_distribution(p, n), tsx::TsallisOrder(alpha));
    });
}

tsx_status tsx_uniform_tsallis_extropy(uint64_t n, double alpha, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::uniform_tsallis_extropy(n, tsx::TsallisOrder(alpha));
    });
}

tsx_status tsx_entropy_extropy_difference(const double* p, size_t n, double alpha, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::entropy_extropy_difference(to_distribution(p, n), tsx::TsallisOrder(alpha));
    });
}

tsx_status tsx_ordering_threshold(uint64_t n, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::ordering_threshold(n);
    });
}

tsx_status tsx_confronto_bounds(uint64_t n, double out[3]) {
    return guarded([&] {
        require(out, "null output pointer");
        const auto b = tsx::confronto_bounds(n);
        out[0] = b.lower;
        out[1] = b.middle;
        out[2] = b.upper;
    });
}

tsx_status tsx_interval_distance(double a_lo, double a_hi, double b_lo, double b_hi, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::interval_distance(tsx::Interval(a_lo, a_hi), tsx::Interval(b_lo, b_hi));
    });
}

tsx_status tsx_interval_similarity(double a_lo, double a_hi, double b_lo, double b_hi, double gamma, double* out) {
    return guarded([&] {
        require(out, "null output pointer");
        *out = tsx::interval_similarity(tsx::Interval(a_lo, a_hi), tsx::Interval(b_lo, b_hi),
                                        tsx::SupportCoefficient(gamma));
    });
}

tsx_status tsx_model_create(const char* const* classes, size_t n_classes, const char* const* features,
                            size_t n_features, const double* intervals, tsx_model** out) {
    return guarded([&] {
        require(out, "null output pointer");
        require(classes && features && intervals, "null model input");
        std::vector<std::string> class_labels;
        std::vector<std::string> feature_labels;
        for (std::size_t i = 0; i < n_classes; ++i) {
            require(classes[i], "null class label");
            class_labels.emplace_back(classes[i]);
        }
        for (std::size_t i = 0; i < n_features; ++i) {
            require(features[i], "null feature label");
            feature_labels.emplace_back(features[i]);
        }
        std::vector<tsx::Interval> cells;
        for (std::size_t i = 0; i < n_classes * n_features; ++i) cells.emplace_back(intervals[2 * i], intervals[2 * i + 1]);
        *out = new tsx_model{tsx::IntervalModel(std::move(class_labels), std::move(feature_labels), std::move(cells))};
    });
}

tsx_status tsx_model_from_json(const char* json, tsx_model** out) {
    return guarded([&] {
        require(json && out, "null argument");
        *out = new tsx_model{tsx::model_from_json(json)};
    });
}

tsx_status tsx_model_to_json(const tsx_model* model, char** out) {
    return guarded([&] {
        require(model && out, "null argument");
        *out = copy_string(tsx::model_to_json(model->model));
    });
}

void tsx_model_free(tsx_model* model) { delete model; }

size_t tsx_model_class_count(const tsx_model* model) { return model ? model->model.class_count() : 0; }

size_t tsx_model_feature_count(const tsx_model* model) { return model ? model->model.feature_count() : 0; }

const char* tsx_model_class_label(const tsx_model* model, size_t index) {
    if (!model || index >= model->model.class_count()) return nullptr;
    return model->model.classes()[index].c_str();
}

const char* tsx_model_feature_label(const tsx_model* model, size_t index) {
    if (!model || index >= model->model.feature_count()) return nullptr;
    return model->model.features()[index].c_str();
}

tsx_status tsx_model_interval(const tsx_model* model, size_t class_index, size_t feature_index, double* lo,
                              double* hi) {
    return guarded([&] {
        require(model && lo && hi, "null argument");
        const auto& cell = model->model.cell(class_index, feature_index);
        *lo = cell.lo();
        *hi = cell.hi();
    });
}

tsx_status tsx_feature_distribution(const tsx_model* model, size_t feature_index, double value, double gamma,
                                    double* out) {
    return guarded([&] {
        require(model && out, "null argument");
        require(feature_index < model->model.feature_count(), "feature index out of range");
        const auto dist = tsx::feature_distribution(model->model, feature_index, value, tsx::SupportCoefficient(gamma));
        std::copy(dist.begin(), dist.end(), out);
    });
}

tsx_status tsx_dataset_load(const char* path, tsx_dataset** out) {
    return guarded([&] {
        require(path && out, "null argument");
        auto loaded = tsx::iris::load_iris(path);
        *out = new tsx_dataset{std::move(loaded.samples), std::move(loaded.warning)};
    });
}

tsx_status tsx_dataset_parse(const char* text, size_t length, tsx_dataset** out) {
    return guarded([&] {
        require((text || length == 0) && out, "null argument");
        auto loaded = tsx::iris::parse_iris(std::string_view(text ? text : "", length));
        *out = new tsx_dataset{std::move(loaded.samples), std::move(loaded.warning)};
    });
}

void tsx_dataset_free(tsx_dataset* dataset) { delete dataset; }

size_t tsx_dataset_size(const tsx_dataset* dataset) { return dataset ? dataset->samples.size() : 0; }

const char* tsx_dataset_warning(const tsx_dataset* dataset) { return dataset ? dataset->warning.c_str() : ""; }

tsx_status tsx_dataset_sample(const tsx_dataset* dataset, size_t index, tsx_sample* out) {
    return guarded([&] {
        require(dataset && out, "null argument");
        if (index >= dataset->samples.size()) {
            throw tsx::Error(tsx::ErrorCode::InvalidArgument, "sample index " + std::to_string(index) + " out of range");
        }
        *out = to_c(dataset->samples[index]);
    });
}

tsx_status tsx_dataset_find(const tsx_dataset* dataset, size_t id, tsx_sample* out) {
    return guarded([&] {
        require(dataset && out, "null argument");
        for (const auto& s : dataset->samples) {
            if (s.id == id) {
                *out = to_c(s);
                return;
            }
        }
        throw tsx::Error(tsx::ErrorCode::NotFound, "no sample with id " + std::to_string(id));
    });
}

tsx_status tsx_dataset_serialize(const tsx_dataset* dataset, char** out) {
    return guarded([&] {
        require(dataset && out, "null argument");
        *out = copy_string(tsx::iris::serialize_iris(dataset->samples));
    });
}

tsx_status tsx_dataset_select(const tsx_dataset* dataset, const tsx_selection_policy* policy, tsx_dataset** out) {
    return guarded([&] {
        require(dataset && policy && out, "null argument");
        tsx::iris::SelectionPolicy p;
        p.per_class_count = policy->per_class_count;
        switch (policy->strategy) {
            case TSX_SELECT_FIRST_K: p.strategy = tsx::iris::SelectionStrategy::FirstK; break;
            case TSX_SELECT_RANDOM_SEEDED: p.strategy = tsx::iris::SelectionStrategy::RandomSeeded; break;
            default: throw tsx::Error(tsx::ErrorCode::InvalidArgument, "unknown selection strategy");
        }
        p.seed = policy->seed;
        *out = new tsx_dataset{tsx::iris::select_training(dataset->samples, p), {}};
    });
}

tsx_status tsx_model_build(const tsx_dataset* training, tsx_model** out) {
    return guarded([&] {
        require(training && out, "null argument");
        *out = new tsx_model{tsx::iris::build_model(training->samples)};
    });
}

tsx_status tsx_extropy_weights(const double* distributions, size_t n_features, size_t n_classes, double alpha,
                               double* weights_out) {
    return guarded([&] {
        require(weights_out, "null output pointer");
        const auto dists = to_distributions(distributions, n_features, n_classes);
        const auto w = tsx::extropy_weights(dists, tsx::TsallisOrder(alpha));
        std::copy(w.values().begin(), w.values().end(), weights_out);
    });
}

tsx_status tsx_fuse(const double* distributions, size_t n_features, size_t n_classes, const double* weights,
                    double* fused_out, size_t* predicted, int* tie) {
    return guarded([&] {
        require(weights && fused_out && predicted && tie, "null argument");
        const auto dists = to_distributions(distributions, n_features, n_classes);
        const tsx::FeatureWeights w(std::vector<double>(weights, weights + n_features));
        const auto d = tsx::fuse(dists, w);
        std::copy(d.fused.begin(), d.fused.end(), fused_out);
        *predicted = d.predicted;
        *tie = d.tie ? 1 : 0;
    });
}

tsx_status tsx_classify(const tsx_model* model, const double* sample, size_t n_features, double gamma, double alpha,
                        tsx_classification* out) {
    return guarded([&] {
        require(model && sample && out, "null argument");
        const auto trace = tsx::classify_sample_traced(model->model, std::span<const double>(sample, n_features),
                                                       tsx::SupportCoefficient(gamma), tsx::TsallisOrder(alpha));
        const std::size_t nc = model->model.class_count();
        for (std::size_t f = 0; f < n_features; ++f) {
            if (out->distributions) {
                std::copy(trace.distributions[f].begin(), trace.distributions[f].end(), out->distributions + f * nc);
            }
            if (out->extropies) out->extropies[f] = trace.extropies[f];
            if (out->weights) out->weights[f] = trace.weights[f];
        }
        if (out->fused) std::copy(trace.decision.fused.begin(), trace.decision.fused.end(), out->fused);
        out->predicted = trace.decision.predicted;
        out->tie = trace.decision.tie ? 1 : 0;
    });
}

tsx_status tsx_evaluate(const tsx_model* model, const tsx_dataset* samples, double gamma, double alpha,
                        unsigned threads, tsx_report** out) {
    return guarded([&] {
        require(model && samples && out, "null argument");
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        const auto rows = tsx::iris::as_rows(samples->samples);
        *out = new tsx_report{tsx::evaluate(model->model, rows, tsx::SupportCoefficient(gamma),
                                            tsx::TsallisOrder(alpha), threads)};
    });
}

void tsx_report_free(tsx_report* report) { delete report; }

double tsx_report_alpha(const tsx_report* report) { return report ? report->report.alpha : 0.0; }

size_t tsx_report_tested(const tsx_report* report) { return report ? report->report.tested : 0; }

size_t tsx_report_correct(const tsx_report* report) { return report ? report->report.correct : 0; }

size_t tsx_report_ties(const tsx_report* report) { return report ? report->report.ties : 0; }

double tsx_report_overall_rate(const tsx_report* report) { return report ? report->report.overall_rate : 0.0; }

size_t tsx_report_class_count(const tsx_report* report) {
    return report ? report->report.per_class_rate.size() : 0;
}

tsx_status tsx_report_class_rate(const tsx_report* report, size_t class_index, double* rate, int* defined,
                                 size_t* tested, size_t* correct) {
    return guarded([&] {
        require(report && rate && defined, "null argument");
        const auto& r = report->report;
        if (class_index >= r.per_class_rate.size()) {
            throw tsx::Error(tsx::ErrorCode::InvalidArgument, "class index out of range");
        }
        *defined = r.per_class_rate[class_index].has_value() ? 1 : 0;
        if (*defined) *rate = *r.per_class_rate[class_index];
        if (tested) *tested = r.per_class_tested[class_index];
        if (correct) *correct = r.per_class_correct[class_index];
    });
}

size_t tsx_report_sample_count(const tsx_report* report) { return report ? report->report.per_sample.size() : 0; }

tsx_status tsx_report_sample(const tsx_report* report, size_t index, tsx_sample_outcome* out) {
    return guarded([&] {
        require(report && out, "null argument");
        if (index >= report->report.per_sample.size()) {
            throw tsx::Error(tsx::ErrorCode::InvalidArgument, "sample outcome index out of range");
        }
        const auto& o = report->report.per_sample[index];
        *out = tsx_sample_outcome{o.id, o.truth, o.predicted, o.tie ? 1 : 0};
    });
}

void tsx_sweep_config_default(tsx_sweep_config* config) {
    if (!config) return;
    const tsx::SweepConfig d;
    config->points_per_support = d.points_per_support;
    config->support_min = d.support_min;
    config->support_max = d.support_max;
    config->alphas = kDefaultSweepAlphas.data();
    config->n_alphas = kDefaultSweepAlphas.size();
    config->n_min = d.n_min;
    config->n_max = d.n_max;
    config->seed = d.seed;
    config->extropy_fault = d.extropy_fault;
}

tsx_status tsx_sweep_run(const tsx_sweep_config* config, tsx_sweep** out) {
    return guarded([&] {
        require(config && out, "null argument");
        require(config->alphas || config->n_alphas == 0, "null alpha grid");
        tsx::SweepConfig c;
        c.points_per_support = config->points_per_support;
        c.support_min = config->support_min;
        c.support_max = config->support_max;
        c.alphas.assign(config->alphas, config->alphas + config->n_alphas);
        c.n_min = config->n_min;
        c.n_max = config->n_max;
        c.seed = config->seed;
        c.extropy_fault = config->extropy_fault;
        *out = new tsx_sweep{tsx::run_property_sweep(c)};
    });
}

void tsx_sweep_free(tsx_sweep* sweep) { delete sweep; }

size_t tsx_sweep_property_count(const tsx_sweep* sweep) { return sweep ? sweep->checks.size() : 0; }

tsx_status tsx_sweep_property(const tsx_sweep* sweep, size_t index, const char** name, int* passed, size_t* checked,
                              const char** counterexample) {
    return guarded([&] {
        require(sweep, "null argument");
        if (index >= sweep->checks.size()) throw tsx::Error(tsx::ErrorCode::InvalidArgument, "property index out of range");
        const auto& c = sweep->checks[index];
        if (name) *name = c.name.c_str();
        if (passed) *passed = c.passed ? 1 : 0;
        if (checked) *checked = c.checked;
        if (counterexample) *counterexample = c.counterexample.c_str();
    });
}

}  // extern "C"
