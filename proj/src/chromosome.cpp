#include "gaids/chromosome.hpp"

#include <limits>
#include <unordered_map>
#include <utility>

namespace gaids {

std::size_t ChromosomeModel::chromosome_count() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.chromosomes.size();
    return n;
}

Chromosome seed_chromosome(const FeatureVector& x, std::string label) {
    Chromosome c;
    c.centroid = x;
    c.member_count = 1;
    c.spread = 0.0;
    c.group_label = std::move(label);
    return c;
}

ChromosomeModel precalculate(std::span<const ConnectionRecord> training, double range, const NormalizationStats& stats) {
    if (training.empty()) throw Error(ErrorKind::EmptyDataset, "cannot precalculate on an empty training set");
    if (!(range >= 0.0)) throw Error(ErrorKind::InvalidConfig, "range must be non-negative");

    ChromosomeModel model;
    model.normalization = stats;
    model.range_used = range;
    model.training_size = training.size();

    std::unordered_map<std::string, std::size_t> group_index;
    for (const auto& rec : training) {
        const FeatureVector x = normalize(rec, stats);
        auto [it, inserted] = group_index.try_emplace(rec.attack_name, model.groups.size());
        if (inserted) model.groups.push_back({rec.attack_name, rec.category, {}});
        auto& group = model.groups[it->second];

        std::size_t best = group.chromosomes.size();
        double best_distance = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < group.chromosomes.size(); ++k) {
            const double d = distance(x, group.chromosomes[k].centroid);
            if (d < best_distance) {
                best_distance = d;
                best = k;
            }
        }
        if (best < group.chromosomes.size() && best_distance <= range) {
            group.chromosomes[best] = merge_record(std::move(group.chromosomes[best]), x);
        } else {
            group.chromosomes.push_back(seed_chromosome(x, group.label));
        }
    }
    return model;
}

NearestMatch nearest_chromosome(const FeatureVector& x, const ChromosomeModel& model) {
    NearestMatch best;
    best.distance = std::numeric_limits<double>::infinity();
    for (const auto& group : model.groups) {
        for (const auto& c : group.chromosomes) {
            const double d = distance(x, c.centroid);
            const bool better = best.chromosome == nullptr || d < best.distance ||
                                (d == best.distance && group.label < best.group->label);
            if (better) {
                best.chromosome = &c;
                best.group = &group;
                best.distance = d;
            }
        }
    }
    if (best.chromosome == nullptr) throw Error(ErrorKind::EmptyModel, "model has no chromosomes");
    return best;
}

}  // namespace gaids
