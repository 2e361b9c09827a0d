/*
 * C interface to the Tsallis extropy library.
 *
 * Every fallible function returns a tsx_status. On failure the message of
 * the most recent error on the calling thread is available from
 * tsx_last_error() until the next failing call on that thread.
 *
 * Objects (datasets, interval models, reports, sweep results) are opaque
 * handles owned by the caller and released with the matching *_free.
 * Strings returned through `char**` are released with tsx_string_free.
 */
#ifndef TSX_TSX_H
#define TSX_TSX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TSX_BUILDING_LIBRARY)
#define TSX_API __declspec(dllexport)
#else
#define TSX_API __declspec(dllimport)
#endif
#else
#define TSX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tsx_status {
    TSX_OK = 0,
    TSX_ERR_VALIDATION = 1,       /* an input violates a documented constraint */
    TSX_ERR_INVALID_ARGUMENT = 2, /* null pointer, size mismatch, out-of-range index */
    TSX_ERR_NOT_FOUND = 3,        /* unknown label or id */
    TSX_ERR_IO = 4,
    TSX_ERR_PARSE = 5,
    TSX_ERR_INTERNAL = 6
} tsx_status;

TSX_API const char* tsx_last_error(void);
TSX_API const char* tsx_version(void);
TSX_API void tsx_string_free(char* s);

/* ---- measures ----------------------------------------------------------
 * `p` points to `n` probabilities, validated as a distribution (entries in
 * [0, 1], sum within 1e-9 of 1). `alpha` > 0; alpha == 1 gives the
 * Shannon entropy / extropy limit. */

TSX_API tsx_status tsx_shannon_entropy(const double* p, size_t n, double* out);
TSX_API tsx_status tsx_extropy(const double* p, size_t n, double* out);
TSX_API tsx_status tsx_tsallis_entropy(const double* p, size_t n, double alpha, double* out);
TSX_API tsx_status tsx_tsallis_extropy(const double* p, size_t n, double alpha, double* out);
TSX_API tsx_status tsx_binary_tsallis(double p, double alpha, double* out);
TSX_API tsx_status tsx_sum_identity_gap(const double* p, size_t n, double alpha, double* out);
TSX_API tsx_status tsx_uniform_tsallis_extropy(uint64_t n, double alpha, double* out);
TSX_API tsx_status tsx_entropy_extropy_difference(const double* p, size_t n, double alpha, double* out);
/* n >= 3 */
TSX_API tsx_status tsx_ordering_threshold(uint64_t n, double* out);
/* out[0] < out[1] < out[2]: (n-2)/(n-1), log(n-1)/log(n), n(n-2)/(n-1)^2 */
TSX_API tsx_status tsx_confronto_bounds(uint64_t n, double out[3]);

/* ---- intervals --------------------------------------------------------- */

TSX_API tsx_status tsx_interval_distance(double a_lo, double a_hi, double b_lo, double b_hi, double* out);
TSX_API tsx_status tsx_interval_similarity(double a_lo, double a_hi, double b_lo, double b_hi, double gamma,
                                           double* out);

typedef struct tsx_model tsx_model;

/* `intervals` holds n_classes * n_features [lo, hi] pairs, class-major. */
TSX_API tsx_status tsx_model_create(const char* const* classes, size_t n_classes, const char* const* features,
                                    size_t n_features, const double* intervals, tsx_model** out);
TSX_API tsx_status tsx_model_from_json(const char* json, tsx_model** out);
TSX_API tsx_status tsx_model_to_json(const tsx_model* model, char** out);
TSX_API void tsx_model_free(tsx_model* model);
TSX_API size_t tsx_model_class_count(const tsx_model* model);
TSX_API size_t tsx_model_feature_count(const tsx_model* model);
/* NULL when the index is out of range. Valid while the model lives. */
TSX_API const char* tsx_model_class_label(const tsx_model* model, size_t index);
TSX_API const char* tsx_model_feature_label(const tsx_model* model, size_t index);
TSX_API tsx_status tsx_model_interval(const tsx_model* model, size_t class_index, size_t feature_index, double* lo,
                                      double* hi);

/* Writes tsx_model_class_count(model) probabilities to `out`. */
TSX_API tsx_status tsx_feature_distribution(const tsx_model* model, size_t feature_index, double value, double gamma,
                                            double* out);

/* ---- dataset ----------------------------------------------------------- */

typedef struct tsx_dataset tsx_dataset;

typedef enum tsx_species { TSX_SETOSA = 0, TSX_VERSICOLOR = 1, TSX_VIRGINICA = 2 } tsx_species;

typedef struct tsx_sample {
    size_t id;
    double features[4]; /* SL, SW, PL, PW in cm */
    tsx_species label;
} tsx_sample;

typedef enum tsx_selection_strategy { TSX_SELECT_FIRST_K = 0, TSX_SELECT_RANDOM_SEEDED = 1 } tsx_selection_strategy;

typedef struct tsx_selection_policy {
    size_t per_class_count;
    tsx_selection_strategy strategy;
    uint64_t seed;
} tsx_selection_policy;

TSX_API tsx_status tsx_dataset_load(const char* path, tsx_dataset** out);
TSX_API tsx_status tsx_dataset_parse(const char* text, size_t length, tsx_dataset** out);
TSX_API void tsx_dataset_free(tsx_dataset* dataset);
TSX_API size_t tsx_dataset_size(const tsx_dataset* dataset);
/* Empty string unless the row count differs from the canonical 150. */
TSX_API const char* tsx_dataset_warning(const tsx_dataset* dataset);
TSX_API tsx_status tsx_dataset_sample(const tsx_dataset* dataset, size_t index, tsx_sample* out);
/* Looks a sample up by its id (row position in the source). */
TSX_API tsx_status tsx_dataset_find(const tsx_dataset* dataset, size_t id, tsx_sample* out);
TSX_API tsx_status tsx_dataset_serialize(const tsx_dataset* dataset, char** out);
TSX_API tsx_status tsx_dataset_select(const tsx_dataset* dataset, const tsx_selection_policy* policy,
                                      tsx_dataset** out);
/* Class-wise [min, max] model over every sample of `training`. */
TSX_API tsx_status tsx_model_build(const tsx_dataset* training, tsx_model** out);

/* ---- classifier -------------------------------------------------------- */

/* `distributions` holds n_features rows of n_classes probabilities. */
TSX_API tsx_status tsx_extropy_weights(const double* distributions, size_t n_features, size_t n_classes,
                                       double alpha, double* weights_out);
TSX_API tsx_status tsx_fuse(const double* distributions, size_t n_features, size_t n_classes, const double* weights,
                            double* fused_out, size_t* predicted, int* tie);

/* Caller-provided buffers; any of them may be NULL.
 *   distributions: n_features * n_classes, extropies/weights: n_features,
 *   fused: n_classes. */
typedef struct tsx_classification {
    double* distributions;
    double* extropies;
    double* weights;
    double* fused;
    size_t predicted;
    int tie;
} tsx_classification;

TSX_API tsx_status tsx_classify(const tsx_model* model, const double* sample, size_t n_features, double gamma,
                                double alpha, tsx_classification* out);

typedef struct tsx_report tsx_report;

typedef struct tsx_sample_outcome {
    size_t id;
    size_t truth;
    size_t predicted;
    int tie;
} tsx_sample_outcome;

/* Every dataset label must index a model class (the Iris order Se, Ve, Vi).
 * threads == 0 picks the hardware concurrency. */
TSX_API tsx_status tsx_evaluate(const tsx_model* model, const tsx_dataset* samples, double gamma, double alpha,
                                unsigned threads, tsx_report** out);
TSX_API void tsx_report_free(tsx_report* report);
TSX_API double tsx_report_alpha(const tsx_report* report);
TSX_API size_t tsx_report_tested(const tsx_report* report);
TSX_API size_t tsx_report_correct(const tsx_report* report);
TSX_API size_t tsx_report_ties(const tsx_report* report);
TSX_API double tsx_report_overall_rate(const tsx_report* report);
TSX_API size_t tsx_report_class_count(const tsx_report* report);
/* *defined is 0 (and *rate untouched) when no sample of that class was tested. */
TSX_API tsx_status tsx_report_class_rate(const tsx_report* report, size_t class_index, double* rate, int* defined,
                                         size_t* tested, size_t* correct);
TSX_API size_t tsx_report_sample_count(const tsx_report* report);
TSX_API tsx_status tsx_report_sample(const tsx_report* report, size_t index, tsx_sample_outcome* out);

/* ---- property sweep ---------------------------------------------------- */

typedef struct tsx_sweep_config {
    size_t points_per_support;
    size_t support_min;
    size_t support_max;
    const double* alphas;
    size_t n_alphas;
    uint64_t n_min;
    uint64_t n_max;
    uint64_t seed;
    double extropy_fault; /* test hook, 0 for a faithful sweep */
} tsx_sweep_config;

/* Fills `config` with the library defaults; `alphas` points at static storage. */
TSX_API void tsx_sweep_config_default(tsx_sweep_config* config);

typedef struct tsx_sweep tsx_sweep;

TSX_API tsx_status tsx_sweep_run(const tsx_sweep_config* config, tsx_sweep** out);
TSX_API void tsx_sweep_free(tsx_sweep* sweep);
TSX_API size_t tsx_sweep_property_count(const tsx_sweep* sweep);
/* Strings stay valid while the sweep lives; counterexample is "" on success. */
TSX_API tsx_status tsx_sweep_property(const tsx_sweep* sweep, size_t index, const char** name, int* passed,
                                      size_t* checked, const char** counterexample);

#ifdef __cplusplus
}
#endif

#endif /* TSX_TSX_H */
