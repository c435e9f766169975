#ifndef GAIDS_GA_HPP
#define GAIDS_GA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaids/chromosome.hpp"
#include "gaids/random.hpp"

namespace gaids {

struct GaParams {
    double range = 0.125;
    double crossover_rate = 0.15;
    double mutation_rate = 0.35;
    std::size_t population_size = 32;
    double removal_fraction = 0.25;
    std::size_t max_generations = 64;
    double mutation_sigma = 0.05;
    std::uint64_t seed = 0;

    /// Throws InvalidConfig when a field is out of its domain.
    void validate() const;
};

/// Added to every chromosome spread in the fitness denominator.
inline constexpr double kSpreadEpsilon = 1e-6;

struct Candidate {
    FeatureVector genes = FeatureVector::Zero();
    std::optional<double> fitness;
    std::optional<std::size_t> nearest_group;  // index into ChromosomeModel::groups
};

using Population = std::vector<Candidate>;

struct Prediction {
    std::string attack_name;
    Category category = Category::Normal;
    double survivor_fitness = 0.0;
    std::size_t generations_run = 0;
};

struct Fitness {
    double value = 0.0;
    std::size_t group = 0;
    std::size_t chromosome = 0;
};

/*
 * Lower is better: min over chromosomes k of distance(genes, centroid_k) /
 * (spread_k + eps). Ties resolve like nearest_chromosome.
 */
Fitness fitness(const FeatureVector& genes, const ChromosomeModel& model);

void evaluate(Population& population, const ChromosomeModel& model);

/*
 * Candidate 0 is `x` itself. Every other candidate perturbs each gene with
 * probability mutation_rate by N(0, mutation_sigma), clamped to [0, 1].
 */
Population initialize_population(const FeatureVector& x, const GaParams& params, Rng& rng);

/// Number of candidates kept by one selection step.
std::size_t survivors_after_selection(std::size_t size, double removal_fraction);

/// Population sizes from `population_size` down to 1, inclusive at both ends.
std::vector<std::size_t> shrink_schedule(std::size_t population_size, double removal_fraction);

/*
 * Stable sort by ascending fitness, then drop the worst
 * max(1, floor(removal_fraction * size)) candidates, keeping at least one.
 */
Population select(Population population, double removal_fraction);

/// Pairs (0,1), (2,3), ... swap gene suffixes at a cut in [1, 37] with probability `rate`.
Population crossover(Population population, double rate, Rng& rng);

/// Each candidate, with probability `rate`, gets one random gene perturbed by N(0, sigma).
Population mutate(Population population, double rate, double sigma, Rng& rng);

Prediction detect_normalized(const FeatureVector& x, const ChromosomeModel& model, const GaParams& params, Rng& rng);
Prediction detect(const ConnectionRecord& record, const ChromosomeModel& model, const GaParams& params, Rng& rng);

}  // namespace gaids

#endif
