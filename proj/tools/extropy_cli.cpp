// extropy: command-line front end over the libtsx C API.
//
//   extropy measure  --p 0.3,0.5,0.2 --alpha 0.5,2 [--measure tsallis-extropy]
//   extropy classify --sample 6.1,3.0,4.9,1.8 [--dataset iris.data] [--gamma 5]
//   extropy evaluate [--dataset iris.data] [--per-class 40] [--policy first|random --seed 7]
//   extropy verify   [--n-min 3 --n-max 10000]
//
// Exit status: 0 success, 1 validation error, 2 property violation, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tsx/tsx.h"

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kValidation = 1, kPropertyViolation = 2, kIo = 3 };

struct CliError {
    int exit_code;
    std::string message;
};

void check(tsx_status status, const std::string& context) {
    if (status == TSX_OK) return;
    const int code = status == TSX_ERR_IO ? kIo : kValidation;
    throw CliError{code, context + ": " + tsx_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const noexcept { Free(p); }
};
using Dataset = std::unique_ptr<tsx_dataset, Deleter<tsx_dataset, tsx_dataset_free>>;
using Model = std::unique_ptr<tsx_model, Deleter<tsx_model, tsx_model_free>>;
using Report = std::unique_ptr<tsx_report, Deleter<tsx_report, tsx_report_free>>;
using Sweep = std::unique_ptr<tsx_sweep, Deleter<tsx_sweep, tsx_sweep_free>>;

enum class Format { Text, Json };

// ---- parsing helpers ------------------------------------------------------

double parse_number(std::string_view text, const std::string& what) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw CliError{kValidation, what + ": cannot parse '" + std::string(text) + "' as a number"};
    }
    return v;
}

std::vector<double> parse_list(std::string_view text, const std::string& what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find_first_of(",\n\t ", start);
        if (end == std::string_view::npos) end = text.size();
        const auto field = text.substr(start, end - start);
        if (!field.empty()) out.push_back(parse_number(field, what));
        start = end + 1;
    }
    if (out.empty()) throw CliError{kValidation, what + ": empty list"};
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kIo, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Flag value, else environment variable, else built-in default.
std::vector<double> resolve_alphas(const std::string& flag, const char* env, std::vector<double> fallback) {
    if (!flag.empty()) return parse_list(flag, "--alpha");
    if (const char* v = std::getenv(env); v && *v) return parse_list(v, env);
    return fallback;
}

double resolve_gamma(const std::optional<double>& flag) {
    if (flag) return *flag;
    if (const char* v = std::getenv("EXTROPY_GAMMA"); v && *v) return parse_number(v, "EXTROPY_GAMMA");
    return 5.0;
}

const std::vector<double> kDefaultAlphaGrid = {0.5, 0.7, 1.0, 1.5, 2.0};

// ---- output helpers -------------------------------------------------------

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string percent(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * v);
    return buf;
}

void emit_json(const json& record) { std::cout << record.dump() << '\n'; }

/// Left-aligned first column, right-aligned rest.
void print_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i == 0) {
                std::cout << std::left << std::setw(static_cast<int>(width[i])) << r[i];
            } else {
                std::cout << "  " << std::right << std::setw(static_cast<int>(width[i])) << r[i];
            }
        }
        std::cout << '\n';
    }
}

// ---- dataset and model ----------------------------------------------------

Dataset load_dataset(const std::string& path) {
    tsx_dataset* raw = nullptr;
    check(tsx_dataset_load(path.c_str(), &raw), "loading '" + path + "'");
    Dataset ds(raw);
    if (const char* w = tsx_dataset_warning(ds.get()); w && *w) std::cerr << "warning: " << w << '\n';
    return ds;
}

struct ModelOptions {
    std::string dataset;
    std::string model_path;
    std::size_t per_class = 40;
    std::string policy = "first";
    std::uint64_t seed = 0;
};

json policy_json(const ModelOptions& o) {
    if (!o.model_path.empty()) return json{{"model", o.model_path}};
    json p = {{"strategy", o.policy}, {"per_class", o.per_class}};
    if (o.policy == "random") p["seed"] = o.seed;
    return p;
}

Model make_model(const ModelOptions& o, const tsx_dataset* data) {
    tsx_model* raw = nullptr;
    if (!o.model_path.empty()) {
        check(tsx_model_from_json(read_file(o.model_path).c_str(), &raw), "reading model '" + o.model_path + "'");
        return Model(raw);
    }
    tsx_selection_policy policy{o.per_class, o.policy == "random" ? TSX_SELECT_RANDOM_SEEDED : TSX_SELECT_FIRST_K,
                                o.seed};
    tsx_dataset* training = nullptr;
    check(tsx_dataset_select(data, &policy, &training), "selecting training samples");
    Dataset owned(training);
    check(tsx_model_build(owned.get(), &raw), "building interval model");
    return Model(raw);
}

std::vector<std::string> class_labels(const tsx_model* m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < tsx_model_class_count(m); ++i) out.emplace_back(tsx_model_class_label(m, i));
    return out;
}

std::vector<std::string> feature_labels(const tsx_model* m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < tsx_model_feature_count(m); ++i) out.emplace_back(tsx_model_feature_label(m, i));
    return out;
}

const char* species_label(int s) {
    static const char* labels[] = {"Se", "Ve", "Vi"};
    return labels[s];
}

// ---- measure --------------------------------------------------------------

struct MeasureOptions {
    std::string p;
    std::string alpha;
    std::vector<std::string> measures;
};

struct MeasureSpec {
    const char* name;
    bool uses_alpha;
};

constexpr MeasureSpec kMeasures[] = {
    {"shannon", false},         {"extropy", false},          {"tsallis-entropy", true},
    {"tsallis-extropy", true},  {"sum-identity-gap", true},  {"entropy-extropy-difference", true},
};

double compute_measure(std::string_view name, const std::vector<double>& p, double alpha) {
    double out = 0.0;
    tsx_status s = TSX_ERR_INTERNAL;
    if (name == "shannon") s = tsx_shannon_entropy(p.data(), p.size(), &out);
    else if (name == "extropy") s = tsx_extropy(p.data(), p.size(), &out);
    else if (name == "tsallis-entropy") s = tsx_tsallis_entropy(p.data(), p.size(), alpha, &out);
    else if (name == "tsallis-extropy") s = tsx_tsallis_extropy(p.data(), p.size(), alpha, &out);
    else if (name == "sum-identity-gap") s = tsx_sum_identity_gap(p.data(), p.size(), alpha, &out);
    else if (name == "entropy-extropy-difference") s = tsx_entropy_extropy_difference(p.data(), p.size(), alpha, &out);
    check(s, "invalid distribution");
    return out;
}

int run_measure(const MeasureOptions& o, Format format) {
    if (o.p.empty()) throw CliError{kValidation, "--p is required"};
    const std::vector<double> p =
        o.p.front() == '@' ? parse_list(read_file(o.p.substr(1)), "--p file") : parse_list(o.p, "--p");
    const auto alphas = resolve_alphas(o.alpha, "EXTROPY_ALPHA", kDefaultAlphaGrid);
    for (double a : alphas) {
        double unused = 0.0;
        check(tsx_tsallis_extropy(std::vector<double>{1.0}.data(), 1, a, &unused), "invalid --alpha");
    }

    std::vector<const MeasureSpec*> selected;
    if (o.measures.empty()) {
        for (const auto& m : kMeasures) selected.push_back(&m);
    } else {
        for (const auto& name : o.measures) {
            const MeasureSpec* found = nullptr;
            for (const auto& m : kMeasures) {
                if (name == m.name) found = &m;
            }
            if (!found) throw CliError{kValidation, "unknown measure '" + name + "'"};
            selected.push_back(found);
        }
    }

    std::vector<std::vector<std::string>> rows = {{"measure", "alpha", "value"}};
    for (const MeasureSpec* m : selected) {
        const std::vector<double> grid = m->uses_alpha ? alphas : std::vector<double>{1.0};
        for (double a : grid) {
            const double v = compute_measure(m->name, p, a);
            if (format == Format::Json) {
                json rec = {{"record", "measure"}, {"measure", m->name}, {"value", v}, {"p", p}};
                rec["alpha"] = m->uses_alpha ? json(a) : json(nullptr);
                emit_json(rec);
            } else {
                std::ostringstream alpha_text;
                alpha_text << a;
                rows.push_back({m->name, m->uses_alpha ? alpha_text.str() : "-", fixed4(v)});
            }
        }
    }
    if (format == Format::Text) print_table(rows);
    return kOk;
}

// ---- classify -------------------------------------------------------------

struct ClassifyOptions {
    ModelOptions model;
    std::string sample;
    std::optional<double> gamma;
    std::string alpha;
};

int run_classify(const ClassifyOptions& o, Format format) {
    if (o.sample.empty()) throw CliError{kValidation, "--sample is required (values or a dataset id)"};
    Dataset data;
    const bool need_data = o.model.model_path.empty() || o.sample.find(',') == std::string::npos;
    if (need_data) data = load_dataset(o.model.dataset);
    const Model model = make_model(o.model, data.get());
    const auto classes = class_labels(model.get());
    const auto features = feature_labels(model.get());
    const std::size_t nc = classes.size();
    const std::size_t nf = features.size();

    std::vector<double> values;
    std::optional<std::size_t> sample_id;
    std::optional<std::string> truth;
    if (o.sample.find(',') != std::string::npos) {
        values = parse_list(o.sample, "--sample");
    } else {
        const double id = parse_number(o.sample, "--sample id");
        if (id < 0 || id != std::floor(id)) throw CliError{kValidation, "--sample id must be a non-negative integer"};
        tsx_sample s{};
        check(tsx_dataset_find(data.get(), static_cast<std::size_t>(id), &s), "sample lookup");
        values.assign(std::begin(s.features), std::end(s.features));
        sample_id = s.id;
        truth = species_label(s.label);
    }
    const double gamma = resolve_gamma(o.gamma);
    const auto alphas = resolve_alphas(o.alpha, "EXTROPY_ALPHA", kDefaultAlphaGrid);

    for (double alpha : alphas) {
        std::vector<double> dists(nf * nc), extropies(nf), weights(nf), fused(nc);
        tsx_classification result{dists.data(), extropies.data(), weights.data(), fused.data(), 0, 0};
        check(tsx_classify(model.get(), values.data(), values.size(), gamma, alpha, &result), "classification");

        if (format == Format::Json) {
            json rec = {{"record", "classification"}, {"sample", values}, {"gamma", gamma}, {"alpha", alpha},
                        {"classes", classes},         {"features", features}};
            rec["sample_id"] = sample_id ? json(*sample_id) : json(nullptr);
            rec["truth"] = truth ? json(*truth) : json(nullptr);
            json d = json::object(), e = json::object(), w = json::object(), fz = json::object();
            for (std::size_t f = 0; f < nf; ++f) {
                d[features[f]] = std::vector<double>(dists.begin() + static_cast<std::ptrdiff_t>(f * nc),
                                                     dists.begin() + static_cast<std::ptrdiff_t>((f + 1) * nc));
                e[features[f]] = extropies[f];
                w[features[f]] = weights[f];
            }
            for (std::size_t c = 0; c < nc; ++c) fz[classes[c]] = fused[c];
            rec["distributions"] = d;
            rec["extropies"] = e;
            rec["weights"] = w;
            rec["fused"] = fz;
            rec["decision"] = classes[result.predicted];
            rec["tie"] = result.tie != 0;
            emit_json(rec);
            continue;
        }

        std::ostringstream head;
        head << "sample (";
        for (std::size_t f = 0; f < values.size(); ++f) head << (f ? ", " : "") << values[f];
        head << ")";
        if (sample_id) head << " id " << *sample_id << " [" << *truth << "]";
        head << "  gamma=" << gamma << "  alpha=" << alpha;
        std::cout << head.str() << '\n';

        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header = {"item"};
        header.insert(header.end(), features.begin(), features.end());
        rows.push_back(header);
        for (std::size_t c = 0; c < nc; ++c) {
            std::vector<std::string> r = {"P(" + classes[c] + ")"};
            for (std::size_t f = 0; f < nf; ++f) r.push_back(fixed4(dists[f * nc + c]));
            rows.push_back(r);
        }
        std::vector<std::string> ext_row = {"extropy"}, w_row = {"weight"};
        for (std::size_t f = 0; f < nf; ++f) {
            ext_row.push_back(fixed4(extropies[f]));
            w_row.push_back(fixed4(weights[f]));
        }
        rows.push_back(ext_row);
        rows.push_back(w_row);
        print_table(rows);
        std::cout << "fused";
        for (std::size_t c = 0; c < nc; ++c) std::cout << "  P(" << classes[c] << ")=" << fixed4(fused[c]);
        std::cout << "\ndecision " << classes[result.predicted] << (result.tie ? " (tie)" : "") << "\n\n";
    }
    return kOk;
}

// ---- evaluate -------------------------------------------------------------

struct EvaluateOptions {
    ModelOptions model;
    std::optional<double> gamma;
    std::string alpha;
    unsigned threads = 0;
};

struct LiteratureRow {
    const char* method;
    double se, ve, vi, overall;
};

// Recognition rates reported in the literature for two evidence-theory
// classifiers on the same data; printed for comparison only.
constexpr LiteratureRow kLiterature[] = {
    {"literature: interval-similarity evidence fusion", 1.00, 0.96, 0.84, 0.9333},
    {"literature: Deng-extropy weighted evidence fusion", 1.00, 0.96, 0.86, 0.94},
};

int run_evaluate(const EvaluateOptions& o, Format format) {
    const Dataset data = load_dataset(o.model.dataset);
    const Model model = make_model(o.model, data.get());
    const auto classes = class_labels(model.get());
    const double gamma = resolve_gamma(o.gamma);
    const auto alphas = resolve_alphas(o.alpha, "EXTROPY_ALPHA", kDefaultAlphaGrid);

    std::vector<std::vector<std::string>> rows;
    {
        std::vector<std::string> header = {"alpha"};
        for (const auto& c : classes) header.push_back(c);
        header.insert(header.end(), {"overall", "correct", "ties"});
        rows.push_back(header);
    }

    struct Best {
        double alpha;
        std::vector<std::optional<double>> per_class;
        double overall;
    };
    std::optional<Best> best;

    for (double alpha : alphas) {
        tsx_report* raw = nullptr;
        check(tsx_evaluate(model.get(), data.get(), gamma, alpha, o.threads, &raw), "evaluation");
        const Report report(raw);
        std::vector<std::optional<double>> per_class;
        json per_class_json = json::object();
        for (std::size_t c = 0; c < tsx_report_class_count(report.get()); ++c) {
            double rate = 0.0;
            int defined = 0;
            std::size_t tested = 0, correct = 0;
            check(tsx_report_class_rate(report.get(), c, &rate, &defined, &tested, &correct), "report");
            per_class.push_back(defined ? std::optional<double>(rate) : std::nullopt);
            per_class_json[classes[c]] = {
                {"rate", defined ? json(rate) : json(nullptr)}, {"tested", tested}, {"correct", correct}};
        }
        const double overall = tsx_report_overall_rate(report.get());
        if (!best || overall > best->overall) best = Best{alpha, per_class, overall};

        if (format == Format::Json) {
            json samples = json::array();
            for (std::size_t i = 0; i < tsx_report_sample_count(report.get()); ++i) {
                tsx_sample_outcome s{};
                check(tsx_report_sample(report.get(), i, &s), "report");
                samples.push_back({{"id", s.id},
                                   {"truth", classes[s.truth]},
                                   {"predicted", classes[s.predicted]},
                                   {"tie", s.tie != 0}});
            }
            emit_json({{"record", "report"},
                       {"alpha", alpha},
                       {"gamma", gamma},
                       {"policy", policy_json(o.model)},
                       {"tested", tsx_report_tested(report.get())},
                       {"correct", tsx_report_correct(report.get())},
                       {"ties", tsx_report_ties(report.get())},
                       {"overall_rate", overall},
                       {"per_class", per_class_json},
                       {"samples", samples}});
        } else {
            std::ostringstream a;
            a << alpha;
            std::vector<std::string> r = {a.str()};
            for (const auto& pc : per_class) r.push_back(pc ? percent(*pc) : "n/a");
            r.push_back(percent(overall));
            r.push_back(std::to_string(tsx_report_correct(report.get())) + "/" +
                        std::to_string(tsx_report_tested(report.get())));
            r.push_back(std::to_string(tsx_report_ties(report.get())));
            rows.push_back(r);
        }
    }

    if (format == Format::Json) {
        json cmp = json::array();
        json ours = {{"method", "tsallis-extropy weighting"}, {"source", "computed"}, {"alpha", best->alpha},
                     {"overall", best->overall}};
        for (std::size_t c = 0; c < classes.size(); ++c) {
            ours[classes[c]] = best->per_class[c] ? json(*best->per_class[c]) : json(nullptr);
        }
        cmp.push_back(ours);
        for (const auto& l : kLiterature) {
            cmp.push_back({{"method", l.method}, {"source", "literature"}, {"Se", l.se}, {"Ve", l.ve},
                           {"Vi", l.vi}, {"overall", l.overall}});
        }
        emit_json({{"record", "comparison"}, {"gamma", gamma}, {"rows", cmp}});
        return kOk;
    }

    std::cout << "recognition rates (gamma=" << gamma << ")\n";
    print_table(rows);
    std::cout << "\ncomparison\n";
    std::vector<std::vector<std::string>> cmp = {{"method", "Se", "Ve", "Vi", "overall"}};
    {
        std::ostringstream name;
        name << "tsallis-extropy weighting (alpha=" << best->alpha << ")";
        std::vector<std::string> r = {name.str()};
        for (std::size_t c = 0; c < 3; ++c) {
            r.push_back(c < best->per_class.size() && best->per_class[c] ? percent(*best->per_class[c]) : "n/a");
        }
        r.push_back(percent(best->overall));
        cmp.push_back(r);
    }
    for (const auto& l : kLiterature) {
        cmp.push_back({l.method, percent(l.se), percent(l.ve), percent(l.vi), percent(l.overall)});
    }
    print_table(cmp);
    return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
    std::uint64_t n_min = 3;
    std::uint64_t n_max = 10000;
    std::string alpha;
    std::size_t points = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool curve = true;
    double inject_fault = 0.0;
};

int run_verify(const VerifyOptions& o, Format format) {
    tsx_sweep_config config;
    tsx_sweep_config_default(&config);
    std::vector<double> alphas;
    if (!o.alpha.empty()) {
        alphas = parse_list(o.alpha, "--alpha");
        config.alphas = alphas.data();
        config.n_alphas = alphas.size();
    }
    if (o.points) config.points_per_support = o.points;
    if (o.seed_set) config.seed = o.seed;
    config.n_min = o.n_min;
    config.n_max = o.n_max;
    config.extropy_fault = o.inject_fault;

    tsx_sweep* raw = nullptr;
    check(tsx_sweep_run(&config, &raw), "property sweep");
    const Sweep sweep(raw);

    bool all_passed = true;
    std::vector<std::vector<std::string>> rows = {{"property", "checks", "result"}};
    for (std::size_t i = 0; i < tsx_sweep_property_count(sweep.get()); ++i) {
        const char* name = nullptr;
        const char* witness = nullptr;
        int passed = 0;
        std::size_t checked = 0;
        check(tsx_sweep_property(sweep.get(), i, &name, &passed, &checked, &witness), "property sweep");
        all_passed = all_passed && passed;
        if (format == Format::Json) {
            json rec = {{"record", "property"}, {"name", name}, {"passed", passed != 0}, {"checked", checked}};
            rec["counterexample"] = passed ? json(nullptr) : json(witness);
            emit_json(rec);
        } else {
            rows.push_back({name, std::to_string(checked), passed ? "pass" : "FAIL"});
        }
        if (!passed) std::cerr << "counterexample for " << name << ": " << witness << '\n';
    }
    if (format == Format::Text) print_table(rows);

    if (o.curve) {
        if (format == Format::Text) std::cout << "\nN  lower  middle  upper  threshold\n";
        for (std::uint64_t n = o.n_min; n <= o.n_max; ++n) {
            double b[3];
            double g = 0.0;
            check(tsx_confronto_bounds(n, b), "bracketing curves");
            check(tsx_ordering_threshold(n, &g), "ordering threshold");
            if (format == Format::Json) {
                emit_json({{"record", "confronto"}, {"n", n}, {"lower", b[0]}, {"middle", b[1]}, {"upper", b[2]},
                           {"threshold", g}});
            } else {
                char line[160];
                std::snprintf(line, sizeof line, "%llu %.10f %.10f %.10f %.10f\n",
                              static_cast<unsigned long long>(n), b[0], b[1], b[2], g);
                std::cout << line;
            }
        }
    }
    return all_passed ? kOk : kPropertyViolation;
}

void add_model_options(CLI::App* cmd, ModelOptions& o) {
    cmd->add_option("--dataset", o.dataset, "Iris CSV (SL,SW,PL,PW,class)")->default_val(TSX_DEFAULT_DATASET);
    cmd->add_option("--model", o.model_path, "Interval model JSON; replaces training-set selection");
    cmd->add_option("--per-class", o.per_class, "Training samples per class")->default_val(40)->check(
        CLI::PositiveNumber);
    cmd->add_option("--policy", o.policy, "Training selection: first or random")
        ->default_val("first")
        ->check(CLI::IsMember({"first", "random"}));
    cmd->add_option("--seed", o.seed, "Seed for --policy random")->default_val(0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tsallis extropy measures and interval-similarity Iris classification"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("text");

    MeasureOptions measure;
    auto* measure_cmd = app.add_subcommand("measure", "Evaluate information measures of one distribution");
    measure_cmd->add_option("--p", measure.p, "Comma-separated probabilities, or @file");
    measure_cmd->add_option("--alpha", measure.alpha, "Comma-separated Tsallis orders");
    measure_cmd->add_option("--measure", measure.measures,
                            "shannon, extropy, tsallis-entropy, tsallis-extropy, sum-identity-gap, "
                            "entropy-extropy-difference (default: all)")
        ->delimiter(',');

    ClassifyOptions classify;
    auto* classify_cmd = app.add_subcommand("classify", "Classify one sample and show every intermediate");
    add_model_options(classify_cmd, classify.model);
    classify_cmd->add_option("--sample", classify.sample, "SL,SW,PL,PW values or a dataset row id");
    classify_cmd->add_option("--gamma", classify.gamma, "Support coefficient (default 5)");
    classify_cmd->add_option("--alpha", classify.alpha, "Comma-separated Tsallis orders");

    EvaluateOptions evaluate;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Recognition rates over the whole dataset");
    add_model_options(evaluate_cmd, evaluate.model);
    evaluate_cmd->add_option("--gamma", evaluate.gamma, "Support coefficient (default 5)");
    evaluate_cmd->add_option("--alpha", evaluate.alpha, "Comma-separated Tsallis orders");
    evaluate_cmd->add_option("--threads", evaluate.threads, "Worker threads, 0 = hardware concurrency")
        ->default_val(0);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Property sweep over the measures plus bracketing-curve data");
    verify_cmd->add_option("--n-min", verify.n_min, "Smallest N for the N-indexed checks (>= 3)")->default_val(3);
    verify_cmd->add_option("--n-max", verify.n_max, "Largest N for the N-indexed checks")->default_val(10000);
    verify_cmd->add_option("--alpha", verify.alpha, "Tsallis orders for the random sweep");
    verify_cmd->add_option("--points", verify.points, "Random points per support size (default 10000)");
    auto* seed_opt = verify_cmd->add_option("--seed", verify.seed, "Sweep seed");
    verify_cmd->add_flag("!--no-curve", verify.curve, "Skip the per-N curve data");
    verify_cmd->add_option("--inject-fault", verify.inject_fault)->group("");  // test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }
    verify.seed_set = seed_opt->count() > 0;
    const Format format = format_name == "json" ? Format::Json : Format::Text;

    try {
        std::cout << std::setprecision(17);
        if (*measure_cmd) return run_measure(measure, format);
        if (*classify_cmd) return run_classify(classify, format);
        if (*evaluate_cmd) return run_evaluate(evaluate, format);
        if (*verify_cmd) return run_verify(verify, format);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.exit_code;
    }
    return kValidation;
}
