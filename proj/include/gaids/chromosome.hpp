#ifndef GAIDS_CHROMOSOME_HPP
#define GAIDS_CHROMOSOME_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gaids/features.hpp"
#include "gaids/kdd.hpp"

namespace gaids {

/*
 * A merged prototype: the running mean of every normalized training
 * record folded into it, plus the RMS member-to-centroid distance.
 */
struct Chromosome {
    FeatureVector centroid = FeatureVector::Zero();
    std::uint64_t member_count = 1;
    double spread = 0.0;
    std::string group_label;
};

struct ChromosomeGroup {
    std::string label;
    Category category = Category::Normal;
    std::vector<Chromosome> chromosomes;
};

struct ChromosomeModel {
    std::vector<ChromosomeGroup> groups;  // first-sight order
    NormalizationStats normalization;
    double range_used = 0.0;
    std::uint64_t training_size = 0;

    std::size_t chromosome_count() const;
    bool empty() const { return chromosome_count() == 0; }
};

/// Fresh single-member chromosome seeded at `x`.
Chromosome seed_chromosome(const FeatureVector& x, std::string label);

/*
 * Folds `x` into `c`. The centroid becomes the running mean and the spread
 * is updated with Welford's recurrence on the summed squared deviations,
 * so after n merges it equals sqrt(sum_j |x_j - mean|^2 / (n * d)) exactly.
 */
template <typename Derived>
Chromosome merge_record(Chromosome c, const Eigen::MatrixBase<Derived>& x) {
    check_feature_dims(c.centroid, x);
    const double n = static_cast<double>(c.member_count);
    const double sum_sq = c.spread * c.spread * n * kFeatureCount;
    const FeatureVector delta = x - c.centroid;
    c.centroid += delta / (n + 1.0);
    const double updated = std::max(0.0, sum_sq + delta.dot(x - c.centroid));
    c.member_count += 1;
    c.spread = std::sqrt(updated / (static_cast<double>(c.member_count) * kFeatureCount));
    return c;
}

/*
 * Precalculation pass. Each record only competes against the
 * chromosomes of its own label: within `range` it merges into the nearest
 * one, otherwise it seeds a new chromosome.
 */
ChromosomeModel precalculate(std::span<const ConnectionRecord> training, double range, const NormalizationStats& stats);

struct NearestMatch {
    const Chromosome* chromosome = nullptr;
    const ChromosomeGroup* group = nullptr;
    double distance = 0.0;
};

/// Exhaustive scan; ties go to the lexicographically smaller label, then the earlier chromosome.
NearestMatch nearest_chromosome(const FeatureVector& x, const ChromosomeModel& model);

}  // namespace gaids

#endif
