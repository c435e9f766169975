#ifndef GAIDS_REPORT_HPP
#define GAIDS_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "gaids/metrics.hpp"

namespace gaids {

enum class ReportFormat { Table, KeyValue };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Rates are printed with four decimals; "n/a" when undefined.
std::string format_rate(std::optional<double> rate);

/*
 * Full evaluation report: the 5x5 matrix with recall/precision margins,
 * the collapsed normal/intrusion table, and the two rates.
 */
std::string format_report(const ConfusionMatrix& matrix, ReportFormat format);

/// Collapsed counts and the two rates only.
std::string format_binary_report(const BinaryCounts& binary, ReportFormat format);

}  // namespace gaids

#endif
