#include "tsx/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "tsx/error.hpp"

namespace tsx::iris {

namespace {

constexpr std::array<std::string_view, kClassCount> kTokens = {"Iris-setosa", "Iris-versicolor", "Iris-virginica"};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_value(std::string_view field, std::size_t line) {
    double v = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || field.empty()) {
        parse_error(line, "cannot parse '" + std::string(field) + "' as a number");
    }
    if (!std::isfinite(v) || v <= 0.0) {
        parse_error(line, "measurement '" + std::string(field) + "' must be finite and positive");
    }
    return v;
}

// Unbiased draw from [0, bound) using only the standardized mt19937_64 output,
// so selections are identical across standard library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

void append_value(std::string& out, double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string_view text(buf, static_cast<std::size_t>(ptr - buf));
    out.append(text);
    if (text.find_first_of(".e") == std::string_view::npos) out.append(".0");
}

}  // namespace

const std::vector<std::string>& class_labels() {
    static const std::vector<std::string> labels = {"Se", "Ve", "Vi"};
    return labels;
}

const std::vector<std::string>& feature_labels() {
    static const std::vector<std::string> labels = {"SL", "SW", "PL", "PW"};
    return labels;
}

std::string_view species_token(Species s) { return kTokens[static_cast<std::size_t>(s)]; }

Species parse_species_token(std::string_view token) {
    for (std::size_t i = 0; i < kTokens.size(); ++i) {
        if (token == kTokens[i]) return static_cast<Species>(i);
    }
    throw Error(ErrorCode::Parse, "unknown class token '" + std::string(token) + "'");
}

LoadResult parse_iris(std::string_view text) {
    LoadResult result;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::size_t blank_from = 0;  // first line of the current run of blank lines
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) {
            if (blank_from == 0) blank_from = line_no;
            continue;
        }
        if (blank_from != 0) parse_error(blank_from, "blank line inside data");

        const auto fields = split_fields(line);
        if (fields.size() != kFeatureCount + 1) {
            parse_error(line_no, "expected 5 comma-separated fields, got " + std::to_string(fields.size()));
        }
        LabeledSample s{};
        s.id = result.samples.size();
        for (std::size_t f = 0; f < kFeatureCount; ++f) s.features[f] = parse_value(fields[f], line_no);
        try {
            s.label = parse_species_token(fields[kFeatureCount]);
        } catch (const Error& e) {
            parse_error(line_no, e.what());
        }
        result.samples.push_back(s);
    }
    if (result.samples.size() != kCanonicalSize) {
        result.warning = "loaded " + std::to_string(result.samples.size()) + " samples, expected " +
                         std::to_string(kCanonicalSize);
    }
    return result;
}

LoadResult load_iris(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open dataset '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::Io, "error reading dataset '" + path.string() + "'");
    return parse_iris(buf.str());
}

std::string serialize_iris(const std::vector<LabeledSample>& samples) {
    std::string out;
    for (const auto& s : samples) {
        for (double v : s.features) {
            append_value(out, v);
            out.push_back(',');
        }
        out.append(species_token(s.label));
        out.push_back('\n');
    }
    return out;
}

std::vector<LabeledSample> select_training(const std::vector<LabeledSample>& samples, const SelectionPolicy& policy) {
    if (policy.per_class_count == 0) throw Error(ErrorCode::InvalidArgument, "per-class count must be positive");

    std::array<std::vector<const LabeledSample*>, kClassCount> by_class;
    for (const auto& s : samples) by_class[static_cast<std::size_t>(s.label)].push_back(&s);

    std::mt19937_64 rng(policy.seed);
    std::vector<LabeledSample> out;
    out.reserve(policy.per_class_count * kClassCount);
    for (std::size_t c = 0; c < kClassCount; ++c) {
        auto& pool = by_class[c];
        if (pool.size() < policy.per_class_count) {
            throw Error(ErrorCode::InvalidArgument,
                        "class " + class_labels()[c] + " has " + std::to_string(pool.size()) +
                            " samples, fewer than the requested " + std::to_string(policy.per_class_count));
        }
        std::sort(pool.begin(), pool.end(), [](auto* a, auto* b) { return a->id < b->id; });
        if (policy.strategy == SelectionStrategy::RandomSeeded) {
            // Partial Fisher-Yates: the first k slots become a uniform k-subset.
            for (std::size_t i = 0; i < policy.per_class_count; ++i) {
                const std::size_t j = i + bounded(rng, pool.size() - i);
                std::swap(pool[i], pool[j]);
            }
            std::sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(policy.per_class_count),
                      [](auto* a, auto* b) { return a->id < b->id; });
        }
        for (std::size_t i = 0; i < policy.per_class_count; ++i) out.push_back(*pool[i]);
    }
    return out;
}

IntervalModel build_model(const std::vector<LabeledSample>& training) {
    std::vector<TrainingRow> rows;
    rows.reserve(training.size());
    for (const auto& s : training) {
        rows.push_back(TrainingRow{s.features, class_labels()[static_cast<std::size_t>(s.label)]});
    }
    return build_interval_model(rows, class_labels(), feature_labels());
}

std::vector<LabeledRow> as_rows(const std::vector<LabeledSample>& samples) {
    std::vector<LabeledRow> rows;
    rows.reserve(samples.size());
    for (const auto& s : samples) rows.push_back(LabeledRow{s.id, s.features, static_cast<std::size_t>(s.label)});
    return rows;
}

}  // namespace tsx::iris
