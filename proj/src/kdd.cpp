#include "gaids/kdd.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

namespace gaids {

namespace {

struct LabelEntry {
    std::string_view name;
    Category category;
};

// Standard KDD Cup 99 attack taxonomy. The first 23 entries are the
// labels of kddcup.data_10_percent.
constexpr std::array<LabelEntry, 42> kLabelTable = {{
    {"normal", Category::Normal},
    // dos
    {"back", Category::Dos},
    {"land", Category::Dos},
    {"neptune", Category::Dos},
    {"pod", Category::Dos},
    {"smurf", Category::Dos},
    {"teardrop", Category::Dos},
    // probe
    {"ipsweep", Category::Probe},
    {"nmap", Category::Probe},
    {"portsweep", Category::Probe},
    {"satan", Category::Probe},
    // r2l
    {"ftp_write", Category::R2l},
    {"guess_passwd", Category::R2l},
    {"imap", Category::R2l},
    {"multihop", Category::R2l},
    {"phf", Category::R2l},
    {"spy", Category::R2l},
    {"warezclient", Category::R2l},
    {"warezmaster", Category::R2l},
    // u2r
    {"buffer_overflow", Category::U2r},
    {"loadmodule", Category::U2r},
    {"perl", Category::U2r},
    {"rootkit", Category::U2r},
    // only in the labeled test set
    {"apache2", Category::Dos},
    {"mailbomb", Category::Dos},
    {"processtable", Category::Dos},
    {"udpstorm", Category::Dos},
    {"mscan", Category::Probe},
    {"saint", Category::Probe},
    {"named", Category::R2l},
    {"sendmail", Category::R2l},
    {"snmpgetattack", Category::R2l},
    {"snmpguess", Category::R2l},
    {"worm", Category::R2l},
    {"xlock", Category::R2l},
    {"xsnoop", Category::R2l},
    {"httptunnel", Category::U2r},
    {"ps", Category::U2r},
    {"sqlattack", Category::U2r},
    {"xterm", Category::U2r},
    // aliases used in attack descriptions outside the data files
    {"guest", Category::R2l},
    {"xnsnoop", Category::R2l},
}};

static_assert(kLabelTable.back().name == "xnsnoop", "label table not fully initialized");

constexpr std::size_t kTrainingLabelCount = 23;

constexpr std::array<std::string_view, kTrainingLabelCount> kTrainingLabels = [] {
    std::array<std::string_view, kTrainingLabelCount> out{};
    for (std::size_t i = 0; i < kTrainingLabelCount; ++i) out[i] = kLabelTable[i].name;
    return out;
}();

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

bool parse_real(std::string_view text, double& out) {
    text = trim(text);
    if (text.empty()) return false;
    if (text.front() == '+') text.remove_prefix(1);
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

std::string_view to_string(Category c) {
    switch (c) {
    case Category::Normal: return "normal";
    case Category::Probe: return "probe";
    case Category::Dos: return "dos";
    case Category::U2r: return "u2r";
    case Category::R2l: return "r2l";
    }
    return "unknown";
}

std::optional<Category> parse_category(std::string_view name) {
    for (Category c : kAllCategories) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

std::optional<Category> category_of(std::string_view attack_name) {
    for (const auto& entry : kLabelTable) {
        if (entry.name == attack_name) return entry.category;
    }
    return std::nullopt;
}

std::span<const std::string_view> training_labels() { return kTrainingLabels; }

RawRecord parse_record(std::string_view line, LabelPolicy policy) {
    line = trim(line);
    std::vector<std::string> fields;
    fields.reserve(kRawFeatureCount + 1);
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }

    RawRecord raw;
    if (fields.size() == kRawFeatureCount && policy == LabelPolicy::Optional) {
        raw.fields = std::move(fields);
        return raw;
    }
    if (fields.size() != kRawFeatureCount + 1) {
        throw Error(ErrorKind::MalformedRecord,
                    "expected " + std::to_string(kRawFeatureCount + 1) + " fields, got " + std::to_string(fields.size()));
    }
    std::string_view label = trim(fields.back());
    if (!label.empty() && label.back() == '.') label.remove_suffix(1);
    if (label.empty()) throw Error(ErrorKind::MalformedRecord, "empty label");
    raw.label = std::string(label);
    fields.pop_back();
    raw.fields = std::move(fields);
    return raw;
}

std::string serialize_record(const RawRecord& raw) {
    std::string line;
    for (std::size_t i = 0; i < raw.fields.size(); ++i) {
        if (i) line += ',';
        line += raw.fields[i];
    }
    if (!raw.label.empty()) {
        line += ',';
        line += raw.label;
        line += '.';
    }
    return line;
}

ConnectionRecord to_connection_record(const RawRecord& raw, const LabelOptions& options) {
    if (raw.fields.size() != kRawFeatureCount) {
        throw Error(ErrorKind::MalformedRecord, "expected " + std::to_string(kRawFeatureCount) + " feature fields");
    }
    ConnectionRecord rec;
    int out = 0;
    for (std::size_t i = 0; i < raw.fields.size(); ++i) {
        if (i == kSymbolicColumns[0] || i == kSymbolicColumns[1] || i == kSymbolicColumns[2]) continue;
        double value = 0.0;
        if (!parse_real(raw.fields[i], value)) {
            throw Error(ErrorKind::NonNumericFeature,
                        "feature " + std::to_string(i + 1) + " is not a finite number: '" + raw.fields[i] + "'");
        }
        rec.features[out++] = value;
    }

    rec.attack_name = raw.label;
    if (raw.label.empty()) return rec;
    if (auto category = category_of(raw.label)) {
        rec.category = *category;
    } else if (options.strict) {
        throw Error(ErrorKind::UnknownLabel, "unknown attack label '" + raw.label + "'");
    } else {
        std::clog << "warning: unknown attack label '" << raw.label << "', assigning category "
                  << to_string(options.fallback) << '\n';
        rec.category = options.fallback;
    }
    return rec;
}

DatasetSummary summarize(std::span<const ConnectionRecord> dataset) {
    DatasetSummary summary;
    for (const auto& rec : dataset) ++summary.counts[static_cast<std::size_t>(rec.category)];
    summary.total = dataset.size();
    return summary;
}

std::string format_summary(const DatasetSummary& summary) {
    std::ostringstream os;
    for (Category c : kAllCategories) os << to_string(c) << '=' << summary.count(c) << '\n';
    os << "total=" << summary.total << '\n';
    return os.str();
}

NormalizationStats fit_normalization(std::span<const ConnectionRecord> training) {
    if (training.empty()) throw Error(ErrorKind::EmptyDataset, "cannot fit normalization on an empty dataset");
    NormalizationStats stats;
    stats.min = training.front().features;
    stats.max = training.front().features;
    for (const auto& rec : training.subspan(1)) {
        stats.min = stats.min.cwiseMin(rec.features);
        stats.max = stats.max.cwiseMax(rec.features);
    }
    return stats;
}

LoadResult load_records(std::istream& in, const LoadOptions& options, std::string_view source) {
    LoadResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
            result.records.push_back(to_connection_record(parse_record(line, options.label_policy), options.labels));
        } catch (const Error& e) {
            const bool skippable = e.kind() == ErrorKind::MalformedRecord || e.kind() == ErrorKind::NonNumericFeature;
            if (options.skip_malformed && skippable) {
                ++result.skipped_lines;
                continue;
            }
            throw Error(e.kind(), std::string(source) + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return result;
}

LoadResult load_records_file(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    return load_records(in, options, path);
}

}  // namespace gaids
