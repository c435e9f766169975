#ifndef GAIDS_METRICS_HPP
#define GAIDS_METRICS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "gaids/kdd.hpp"

namespace gaids {

using CountMatrix = Eigen::Matrix<std::int64_t, 5, 5>;

/// Rows are the actual class, columns the predicted class, in Category order.
struct ConfusionMatrix {
    CountMatrix counts = CountMatrix::Zero();

    std::int64_t& at(Category actual, Category predicted) {
        return counts(static_cast<int>(actual), static_cast<int>(predicted));
    }
    std::int64_t at(Category actual, Category predicted) const {
        return counts(static_cast<int>(actual), static_cast<int>(predicted));
    }
    std::int64_t total() const { return counts.sum(); }

    /// Cellwise sum; used to merge per-worker shards.
    ConfusionMatrix& operator+=(const ConfusionMatrix& other) {
        counts += other.counts;
        return *this;
    }
    bool operator==(const ConfusionMatrix& other) const { return counts == other.counts; }
};

ConfusionMatrix accumulate(ConfusionMatrix matrix, Category actual, Category predicted);

struct BinaryCounts {
    std::int64_t true_negative = 0;
    std::int64_t false_positive = 0;
    std::int64_t false_negative = 0;
    std::int64_t true_positive = 0;

    bool operator==(const BinaryCounts&) const = default;
};

/// Normal vs intrusion; an intrusion predicted as any intrusion class counts as detected.
BinaryCounts collapse_to_binary(const ConfusionMatrix& matrix);

/// TP / (FN + TP). Throws NoIntrusions when the denominator is zero.
double detection_rate(const BinaryCounts& b);

/// FP / (TN + FP). Throws NoNormals when the denominator is zero.
double false_positive_rate(const BinaryCounts& b);

struct ClassRates {
    std::array<double, kCategoryCount> recall{};
    std::array<double, kCategoryCount> precision{};
    // set where the row (recall) or column (precision) was empty and the rate was reported as 0
    std::array<bool, kCategoryCount> recall_undefined{};
    std::array<bool, kCategoryCount> precision_undefined{};
};

ClassRates per_class_rates(const ConfusionMatrix& matrix);

struct Metrics {
    BinaryCounts binary;
    std::optional<double> detection_rate;        // unset without intrusions
    std::optional<double> false_positive_rate;   // unset without normal traffic
    ClassRates per_class;
};

Metrics compute_metrics(const ConfusionMatrix& matrix);

}  // namespace gaids

#endif
