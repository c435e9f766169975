#ifndef GAIDS_TESTS_KDD_FIXTURES_HPP
#define GAIDS_TESTS_KDD_FIXTURES_HPP

#include <array>
#include <cstdint>

#include "gaids/metrics.hpp"

namespace gaids::fixtures {

// Published confusion matrix of the GA detector on the "corrected" test
// set; rows actual, columns predicted, order normal/probe/dos/u2r/r2l.
inline ConfusionMatrix published_confusion() {
    ConfusionMatrix m;
    m.counts << 42138, 1421, 15835, 486, 713,
                398, 2963, 654, 2, 149,
                921, 432, 228489, 1, 10,
                146, 21, 8, 43, 10,
                11191, 578, 3398, 141, 881;
    return m;
}

// Published normal/intrusion table (its FN/TP differ from summing the matrix).
inline BinaryCounts published_binary() { return {42138, 18455, 12528, 237908}; }

inline constexpr std::array<std::int64_t, 5> kTestDistribution = {60593, 4166, 229853, 228, 16189};
inline constexpr std::array<std::int64_t, 5> kTrainDistribution = {97280, 4107, 391458, 52, 1124};

inline constexpr std::array<double, 5> kPublishedRecallPercent = {69.5, 71.1, 99.4, 18.9, 5.4};
inline constexpr std::array<double, 5> kPublishedPrecisionPercent = {76.9, 54.7, 92.0, 6.4, 50.0};

}  // namespace gaids::fixtures

#endif
