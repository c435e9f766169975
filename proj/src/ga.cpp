#include "gaids/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace gaids {

void GaParams::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
    if (!(range >= 0.0) || !std::isfinite(range)) fail("range must be a finite non-negative number");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) fail("crossover rate must lie in [0, 1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) fail("mutation rate must lie in [0, 1]");
    if (population_size < 1) fail("population size must be at least 1");
    if (!(removal_fraction > 0.0 && removal_fraction < 1.0)) fail("removal fraction must lie in (0, 1)");
    if (max_generations < 1) fail("max generations must be at least 1");
    if (!(mutation_sigma >= 0.0) || !std::isfinite(mutation_sigma)) fail("mutation sigma must be non-negative");
}

Fitness fitness(const FeatureVector& genes, const ChromosomeModel& model) {
    Fitness best;
    best.value = std::numeric_limits<double>::infinity();
    bool found = false;
    for (std::size_t g = 0; g < model.groups.size(); ++g) {
        const auto& group = model.groups[g];
        for (std::size_t k = 0; k < group.chromosomes.size(); ++k) {
            const auto& c = group.chromosomes[k];
            const double z = distance(genes, c.centroid) / (c.spread + kSpreadEpsilon);
            const bool better = !found || z < best.value ||
                                (z == best.value && group.label < model.groups[best.group].label);
            if (better) {
                best = {z, g, k};
                found = true;
            }
        }
    }
    if (!found) throw Error(ErrorKind::EmptyModel, "model has no chromosomes");
    return best;
}

void evaluate(Population& population, const ChromosomeModel& model) {
    for (auto& candidate : population) {
        const Fitness f = fitness(candidate.genes, model);
        candidate.fitness = f.value;
        candidate.nearest_group = f.group;
    }
}

Population initialize_population(const FeatureVector& x, const GaParams& params, Rng& rng) {
    Population population(params.population_size);
    population[0].genes = x;
    for (std::size_t i = 1; i < population.size(); ++i) {
        FeatureVector genes = x;
        for (int j = 0; j < kFeatureCount; ++j) {
            if (rng.bernoulli(params.mutation_rate)) genes[j] += params.mutation_sigma * rng.normal();
        }
        clamp_unit(genes);
        population[i].genes = genes;
    }
    return population;
}

std::size_t survivors_after_selection(std::size_t size, double removal_fraction) {
    if (size <= 1) return size;
    // The small bias keeps products such as 0.29 * 100 from flooring one short.
    const auto scaled = static_cast<std::size_t>(std::floor(removal_fraction * static_cast<double>(size) + 1e-9));
    const std::size_t removed = std::clamp<std::size_t>(scaled, 1, size - 1);
    return size - removed;
}

std::vector<std::size_t> shrink_schedule(std::size_t population_size, double removal_fraction) {
    std::vector<std::size_t> sizes{population_size};
    while (sizes.back() > 1) sizes.push_back(survivors_after_selection(sizes.back(), removal_fraction));
    return sizes;
}

Population select(Population population, double removal_fraction) {
    for (const auto& c : population) {
        if (!c.fitness) throw Error(ErrorKind::UnsetFitness, "selection requires evaluated candidates");
    }
    std::stable_sort(population.begin(), population.end(),
                     [](const Candidate& a, const Candidate& b) { return *a.fitness < *b.fitness; });
    population.resize(survivors_after_selection(population.size(), removal_fraction));
    return population;
}

Population crossover(Population population, double rate, Rng& rng) {
    for (std::size_t i = 0; i + 1 < population.size(); i += 2) {
        if (!rng.bernoulli(rate)) continue;
        const auto cut = static_cast<int>(rng.uniform_int(1, kFeatureCount - 1));
        const int tail = kFeatureCount - cut;
        population[i].genes.tail(tail).swap(population[i + 1].genes.tail(tail));
        population[i].fitness.reset();
        population[i + 1].fitness.reset();
    }
    return population;
}

Population mutate(Population population, double rate, double sigma, Rng& rng) {
    for (auto& candidate : population) {
        if (!rng.bernoulli(rate)) continue;
        const auto gene = static_cast<int>(rng.uniform_int(0, kFeatureCount - 1));
        candidate.genes[gene] = std::clamp(candidate.genes[gene] + sigma * rng.normal(), 0.0, 1.0);
        candidate.fitness.reset();
    }
    return population;
}

Prediction detect_normalized(const FeatureVector& x, const ChromosomeModel& model, const GaParams& params, Rng& rng) {
    if (model.empty()) throw Error(ErrorKind::EmptyModel, "model has no chromosomes");

    Population population = initialize_population(x, params, rng);
    std::size_t generation = 0;
    while (true) {
        evaluate(population, model);
        ++generation;
        if (population.size() == 1 || generation >= params.max_generations) break;
        population = select(std::move(population), params.removal_fraction);
        population = crossover(std::move(population), params.crossover_rate, rng);
        population = mutate(std::move(population), params.mutation_rate, params.mutation_sigma, rng);
    }

    const auto best = std::min_element(population.begin(), population.end(), [](const Candidate& a, const Candidate& b) {
        return *a.fitness < *b.fitness;
    });
    const auto& group = model.groups[*best->nearest_group];
    return {group.label, group.category, *best->fitness, generation};
}

Prediction detect(const ConnectionRecord& record, const ChromosomeModel& model, const GaParams& params, Rng& rng) {
    return detect_normalized(normalize(record, model.normalization), model, params, rng);
}

}  // namespace gaids
