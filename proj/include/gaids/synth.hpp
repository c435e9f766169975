#ifndef GAIDS_SYNTH_HPP
#define GAIDS_SYNTH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gaids/kdd.hpp"

namespace gaids {

struct SynthParams {
    std::size_t clusters = 5;
    std::size_t points_per_cluster = 100;
    std::size_t holdout_per_cluster = 0;
    double separation = 0.5;   // minimum pairwise center distance; 0 puts every cluster on one center
    double noise_sigma = 0.03;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SyntheticData {
    std::vector<FeatureVector> centers;
    std::vector<std::string> labels;  // one KDD label per cluster
    std::vector<RawRecord> train;
    std::vector<RawRecord> holdout;
};

/*
 * Gaussian clusters in the 38 numeric dimensions. Cluster k carries a
 * distinct known KDD label, the first five covering the five categories.
 * Symbolic columns are filled with "tcp,http,SF".
 */
SyntheticData generate_synthetic(const SynthParams& params);

void write_kdd(std::ostream& out, std::span<const RawRecord> records);

}  // namespace gaids

#endif
