#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tsx/classifier.hpp"
#include "tsx/intervals.hpp"

namespace tsx::iris {

enum class Species : std::uint8_t { Setosa = 0, Versicolor = 1, Virginica = 2 };

inline constexpr std::size_t kFeatureCount = 4;
inline constexpr std::size_t kClassCount = 3;
inline constexpr std::size_t kCanonicalSize = 150;

/// Short labels in model order: Se, Ve, Vi.
const std::vector<std::string>& class_labels();
/// SL, SW, PL, PW (centimetres).
const std::vector<std::string>& feature_labels();

std::string_view species_token(Species s);  // "Iris-setosa", ...
Species parse_species_token(std::string_view token);

struct LabeledSample {
    std::size_t id;  // 0-based row position in the source
    std::array<double, kFeatureCount> features;
    Species label;
};

struct LoadResult {
    std::vector<LabeledSample> samples;
    /// Non-empty when the row count differs from the canonical 150.
    std::string warning;
};

/// Parses `SL,SW,PL,PW,class` rows (no header, LF or CRLF). A trailing
/// blank line is tolerated; any other malformed row is an Error{Parse}
/// carrying its 1-based line number.
LoadResult parse_iris(std::string_view text);
LoadResult load_iris(const std::filesystem::path& path);

/// Inverse of parse_iris for well-formed input: shortest round-trip decimal
/// for each value with at least one fractional digit, LF line endings.
std::string serialize_iris(const std::vector<LabeledSample>& samples);

enum class SelectionStrategy { FirstK, RandomSeeded };

struct SelectionPolicy {
    std::size_t per_class_count = 40;
    SelectionStrategy strategy = SelectionStrategy::FirstK;
    std::uint64_t seed = 0;
};

/// Picks per_class_count samples of each class. FirstK keeps the lowest ids;
/// RandomSeeded draws without replacement from a seeded mt19937_64. Output is
/// grouped by class (Se, Ve, Vi) and in id order within a class.
std::vector<LabeledSample> select_training(const std::vector<LabeledSample>& samples, const SelectionPolicy& policy);

IntervalModel build_model(const std::vector<LabeledSample>& training);

/// Views into `samples` suitable for tsx::evaluate; `samples` must outlive them.
std::vector<LabeledRow> as_rows(const std::vector<LabeledSample>& samples);

}  // namespace tsx::iris
