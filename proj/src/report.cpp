#include "gaids/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace gaids {

namespace {

std::optional<double> checked(double (*rate)(const BinaryCounts&), const BinaryCounts& b) {
    try {
        return rate(b);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string percent(double value, bool undefined) {
    if (undefined) return "n/a";
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.1f%%", value * 100.0);
    return buf;
}

void write_binary_table(std::ostringstream& os, const BinaryCounts& b) {
    os << std::left << std::setw(12) << "actual" << std::right << std::setw(24) << "predicted normal"
       << std::setw(24) << "predicted intrusion" << '\n';
    os << std::left << std::setw(12) << "normal" << std::right << std::setw(24)
       << ("TN " + std::to_string(b.true_negative)) << std::setw(24) << ("FP " + std::to_string(b.false_positive))
       << '\n';
    os << std::left << std::setw(12) << "intrusion" << std::right << std::setw(24)
       << ("FN " + std::to_string(b.false_negative)) << std::setw(24) << ("TP " + std::to_string(b.true_positive))
       << '\n';
}

void write_binary_kv(std::ostringstream& os, const BinaryCounts& b) {
    os << "true_negative=" << b.true_negative << '\n'
       << "false_positive=" << b.false_positive << '\n'
       << "false_negative=" << b.false_negative << '\n'
       << "true_positive=" << b.true_positive << '\n';
}

void write_rates(std::ostringstream& os, const BinaryCounts& b, ReportFormat format) {
    const auto dr = format_rate(checked(&detection_rate, b));
    const auto fp = format_rate(checked(&false_positive_rate, b));
    if (format == ReportFormat::KeyValue) {
        os << "detection_rate=" << dr << '\n' << "false_positive_rate=" << fp << '\n';
    } else {
        os << "detection rate      " << dr << '\n' << "false positive rate " << fp << '\n';
    }
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
    if (name == "table") return ReportFormat::Table;
    if (name == "kv") return ReportFormat::KeyValue;
    return std::nullopt;
}

std::string format_rate(std::optional<double> rate) {
    if (!rate) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *rate);
    return buf;
}

std::string format_report(const ConfusionMatrix& matrix, ReportFormat format) {
    const BinaryCounts binary = collapse_to_binary(matrix);
    const ClassRates rates = per_class_rates(matrix);
    std::ostringstream os;

    if (format == ReportFormat::KeyValue) {
        for (Category a : kAllCategories) {
            for (Category p : kAllCategories) {
                os << to_string(a) << ',' << to_string(p) << ',' << matrix.at(a, p) << '\n';
            }
        }
        write_binary_kv(os, binary);
        write_rates(os, binary, format);
        for (std::size_t c = 0; c < kCategoryCount; ++c) {
            os << "recall." << to_string(kAllCategories[c]) << '='
               << format_rate(rates.recall_undefined[c] ? std::nullopt : std::optional(rates.recall[c])) << '\n';
        }
        for (std::size_t c = 0; c < kCategoryCount; ++c) {
            os << "precision." << to_string(kAllCategories[c]) << '='
               << format_rate(rates.precision_undefined[c] ? std::nullopt : std::optional(rates.precision[c])) << '\n';
        }
        return os.str();
    }

    constexpr int kLabelWidth = 12;
    constexpr int kCellWidth = 10;
    os << std::left << std::setw(kLabelWidth) << "actual" << std::right;
    for (Category p : kAllCategories) os << std::setw(kCellWidth) << to_string(p);
    os << std::setw(kCellWidth) << "%correct" << '\n';
    for (std::size_t a = 0; a < kCategoryCount; ++a) {
        os << std::left << std::setw(kLabelWidth) << to_string(kAllCategories[a]) << std::right;
        for (Category p : kAllCategories) os << std::setw(kCellWidth) << matrix.at(kAllCategories[a], p);
        os << std::setw(kCellWidth) << percent(rates.recall[a], rates.recall_undefined[a]) << '\n';
    }
    os << std::left << std::setw(kLabelWidth) << "%correct" << std::right;
    for (std::size_t p = 0; p < kCategoryCount; ++p) {
        os << std::setw(kCellWidth) << percent(rates.precision[p], rates.precision_undefined[p]);
    }
    os << "\n\n";
    write_binary_table(os, binary);
    os << '\n';
    write_rates(os, binary, format);
    return os.str();
}

std::string format_binary_report(const BinaryCounts& binary, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::KeyValue) {
        write_binary_kv(os, binary);
    } else {
        write_binary_table(os, binary);
        os << '\n';
    }
    write_rates(os, binary, format);
    return os.str();
}

}  // namespace gaids
