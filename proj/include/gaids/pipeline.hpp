#ifndef GAIDS_PIPELINE_HPP
#define GAIDS_PIPELINE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gaids/chromosome.hpp"
#include "gaids/ga.hpp"
#include "gaids/metrics.hpp"

namespace gaids {

/// Fits normalization on `training` and runs the precalculation pass.
ChromosomeModel train_model(std::span<const ConnectionRecord> training, double range);

/// Group count, chromosome count and per-group sizes.
std::string format_train_summary(const ChromosomeModel& model);

/*
 * Classifies every record. Record i draws from Rng::for_record(seed, i), so
 * the result does not depend on the worker count.
 */
std::vector<Prediction> detect_batch(std::span<const ConnectionRecord> records, const ChromosomeModel& model,
                                     const GaParams& params, std::size_t workers = 1);

/// detect_batch + accumulation into per-worker confusion shards, merged at the end.
ConfusionMatrix evaluate_batch(std::span<const ConnectionRecord> records, const ChromosomeModel& model,
                               const GaParams& params, std::size_t workers = 1);

/// "<index>,<attack_name>,<category>,<survivor_fitness>,<generations_run>"
std::string format_prediction_row(std::size_t index, const Prediction& prediction);

}  // namespace gaids

#endif
