#ifndef GAIDS_KDD_HPP
#define GAIDS_KDD_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaids/features.hpp"

namespace gaids {

/// Top-level traffic classes, in confusion-matrix order.
enum class Category : std::uint8_t { Normal = 0, Probe, Dos, U2r, R2l };

inline constexpr std::size_t kCategoryCount = 5;
inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::Normal, Category::Probe, Category::Dos, Category::U2r, Category::R2l};

std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view name);

/// Raw KDD line fields; symbolic features still in place.
inline constexpr std::size_t kRawFeatureCount = 41;

struct RawRecord {
    std::vector<std::string> fields;  // 41 feature strings
    std::string label;                // trailing period stripped; empty for unlabeled input
};

struct ConnectionRecord {
    FeatureVector features;  // raw, unnormalized
    std::string attack_name;
    Category category = Category::Normal;
};

/*
 * Attack-name -> category table. Covers the 22 attack types of the
 * training set plus "normal", and the additional attack names found in
 * the labeled test set.
 */
std::optional<Category> category_of(std::string_view attack_name);

/// The 23 labels present in the 10% training file.
std::span<const std::string_view> training_labels();

enum class LabelPolicy { Required, Optional };

/*
 * Splits one KDD line. With LabelPolicy::Optional a 41-field line (no
 * label column) is accepted and yields an empty label.
 */
RawRecord parse_record(std::string_view line, LabelPolicy policy = LabelPolicy::Required);

/// Inverse of parse_record; the label is written with a trailing period.
std::string serialize_record(const RawRecord& raw);

struct LabelOptions {
    bool strict = true;
    Category fallback = Category::Normal;  // used for unknown labels when not strict
};

ConnectionRecord to_connection_record(const RawRecord& raw, const LabelOptions& options = {});

/// Indices (0-based) of the symbolic KDD columns: protocol_type, service, flag.
inline constexpr std::array<std::size_t, 3> kSymbolicColumns = {1, 2, 3};

struct DatasetSummary {
    std::array<std::uint64_t, kCategoryCount> counts{};
    std::uint64_t total = 0;

    std::uint64_t count(Category c) const { return counts[static_cast<std::size_t>(c)]; }
    bool operator==(const DatasetSummary&) const = default;
};

DatasetSummary summarize(std::span<const ConnectionRecord> dataset);

/// Flat "key=count" text, one per line, categories first then total.
std::string format_summary(const DatasetSummary& summary);

struct NormalizationStats {
    FeatureVector min = FeatureVector::Zero();
    FeatureVector max = FeatureVector::Zero();
};

NormalizationStats fit_normalization(std::span<const ConnectionRecord> training);

/*
 * Min-max scaling into [0, 1]. Features with zero training span map to 0
 * and values outside the training span are clamped.
 */
template <typename Derived>
FeatureVector normalize(const Eigen::MatrixBase<Derived>& raw, const NormalizationStats& stats) {
    FeatureVector out;
    for (int i = 0; i < kFeatureCount; ++i) {
        const double span = stats.max[i] - stats.min[i];
        out[i] = span > 0.0 ? std::clamp((raw[i] - stats.min[i]) / span, 0.0, 1.0) : 0.0;
    }
    return out;
}

inline FeatureVector normalize(const ConnectionRecord& record, const NormalizationStats& stats) {
    return normalize(record.features, stats);
}

struct LoadOptions {
    LabelPolicy label_policy = LabelPolicy::Required;
    LabelOptions labels;
    bool skip_malformed = false;  // lenient mode: skip and count bad lines
};

struct LoadResult {
    std::vector<ConnectionRecord> records;
    std::size_t skipped_lines = 0;
};

/*
 * Reads a KDD99 CSV stream. Empty lines are ignored. Errors carry a
 * "<source>:<line>:" prefix.
 */
LoadResult load_records(std::istream& in, const LoadOptions& options = {}, std::string_view source = "<input>");
LoadResult load_records_file(const std::string& path, const LoadOptions& options = {});

}  // namespace gaids

#endif
