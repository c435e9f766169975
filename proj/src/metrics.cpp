#include "gaids/metrics.hpp"

namespace gaids {

ConfusionMatrix accumulate(ConfusionMatrix matrix, Category actual, Category predicted) {
    ++matrix.at(actual, predicted);
    return matrix;
}

BinaryCounts collapse_to_binary(const ConfusionMatrix& matrix) {
    const auto& m = matrix.counts;
    BinaryCounts b;
    b.true_negative = m(0, 0);
    b.false_positive = m.row(0).tail<4>().sum();
    b.false_negative = m.col(0).tail<4>().sum();
    b.true_positive = m.bottomRightCorner<4, 4>().sum();
    return b;
}

double detection_rate(const BinaryCounts& b) {
    const std::int64_t intrusions = b.false_negative + b.true_positive;
    if (intrusions == 0) throw Error(ErrorKind::NoIntrusions, "detection rate undefined: no intrusions");
    return static_cast<double>(b.true_positive) / static_cast<double>(intrusions);
}

double false_positive_rate(const BinaryCounts& b) {
    const std::int64_t normals = b.true_negative + b.false_positive;
    if (normals == 0) throw Error(ErrorKind::NoNormals, "false positive rate undefined: no normal records");
    return static_cast<double>(b.false_positive) / static_cast<double>(normals);
}

ClassRates per_class_rates(const ConfusionMatrix& matrix) {
    ClassRates rates;
    const auto row_sums = matrix.counts.rowwise().sum();
    const auto col_sums = matrix.counts.colwise().sum();
    for (int c = 0; c < static_cast<int>(kCategoryCount); ++c) {
        const auto diag = static_cast<double>(matrix.counts(c, c));
        rates.recall_undefined[c] = row_sums(c) == 0;
        rates.precision_undefined[c] = col_sums(c) == 0;
        rates.recall[c] = row_sums(c) == 0 ? 0.0 : diag / static_cast<double>(row_sums(c));
        rates.precision[c] = col_sums(c) == 0 ? 0.0 : diag / static_cast<double>(col_sums(c));
    }
    return rates;
}

Metrics compute_metrics(const ConfusionMatrix& matrix) {
    Metrics m;
    m.binary = collapse_to_binary(matrix);
    if (m.binary.false_negative + m.binary.true_positive > 0) m.detection_rate = detection_rate(m.binary);
    if (m.binary.true_negative + m.binary.false_positive > 0) m.false_positive_rate = false_positive_rate(m.binary);
    m.per_class = per_class_rates(matrix);
    return m;
}

}  // namespace gaids
