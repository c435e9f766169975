#include "gaids/synth.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gaids/features.hpp"
#include "gaids/model_io.hpp"
#include "gaids/random.hpp"

namespace gaids {

namespace {

constexpr std::size_t kMaxCenterAttempts = 10000;

std::vector<std::string> cluster_labels(std::size_t clusters) {
    std::vector<std::string> labels = {"normal", "portsweep", "neptune", "rootkit", "warezclient"};
    for (auto label : training_labels()) {
        if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.emplace_back(label);
    }
    labels.resize(clusters);
    return labels;
}

FeatureVector draw_center(Rng& rng) {
    FeatureVector c;
    for (int i = 0; i < kFeatureCount; ++i) c[i] = 0.15 + 0.7 * static_cast<double>(rng.next() >> 63) + 0.1 * (rng.uniform() - 0.5);
    return c;
}

RawRecord make_record(const FeatureVector& values, const std::string& label) {
    RawRecord raw;
    raw.fields.reserve(kRawFeatureCount);
    raw.fields.push_back(format_real(values[0]));
    raw.fields.insert(raw.fields.end(), {"tcp", "http", "SF"});
    for (int i = 1; i < kFeatureCount; ++i) raw.fields.push_back(format_real(values[i]));
    raw.label = label;
    return raw;
}

}  // namespace

void SynthParams::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
    if (clusters < 1 || clusters > training_labels().size()) {
        fail("cluster count must lie in [1, " + std::to_string(training_labels().size()) + "]");
    }
    if (points_per_cluster < 1) fail("points per cluster must be at least 1");
    if (!(separation >= 0.0) || !std::isfinite(separation)) fail("separation must be non-negative");
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) fail("noise sigma must be non-negative");
}

SyntheticData generate_synthetic(const SynthParams& params) {
    params.validate();
    Rng rng(params.seed);
    SyntheticData data;
    data.labels = cluster_labels(params.clusters);

    if (params.separation == 0.0) {
        data.centers.assign(params.clusters, draw_center(rng));
    } else {
        for (std::size_t k = 0; k < params.clusters; ++k) {
            std::size_t attempts = 0;
            while (true) {
                if (++attempts > kMaxCenterAttempts) {
                    throw Error(ErrorKind::InvalidConfig, "cannot place clusters with the requested separation");
                }
                FeatureVector candidate = draw_center(rng);
                const bool far = std::all_of(data.centers.begin(), data.centers.end(), [&](const FeatureVector& c) {
                    return distance(candidate, c) >= params.separation;
                });
                if (far) {
                    data.centers.push_back(candidate);
                    break;
                }
            }
        }
    }

    auto draw_points = [&](std::size_t per_cluster, std::vector<RawRecord>& out) {
        out.reserve(per_cluster * params.clusters);
        for (std::size_t p = 0; p < per_cluster; ++p) {
            for (std::size_t k = 0; k < params.clusters; ++k) {
                FeatureVector x = data.centers[k];
                for (int i = 0; i < kFeatureCount; ++i) x[i] += params.noise_sigma * rng.normal();
                out.push_back(make_record(x, data.labels[k]));
            }
        }
    };
    draw_points(params.points_per_cluster, data.train);
    draw_points(params.holdout_per_cluster, data.holdout);
    return data;
}

void write_kdd(std::ostream& out, std::span<const RawRecord> records) {
    for (const auto& raw : records) out << serialize_record(raw) << '\n';
}

}  // namespace gaids
