#include "gaids/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "gaids/model_io.hpp"

namespace gaids {

namespace {

// Runs body(worker, index) for index in [0, n). Indices are handed out in
// fixed-size blocks; the first exception is rethrown on the caller.
template <typename Body>
void parallel_for(std::size_t n, std::size_t workers, Body&& body) {
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(0, i);
        return;
    }
    constexpr std::size_t kBlock = 64;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    while (!failed.load(std::memory_order_relaxed)) {
                        const std::size_t begin = next.fetch_add(kBlock);
                        if (begin >= n) break;
                        const std::size_t end = std::min(n, begin + kBlock);
                        for (std::size_t i = begin; i < end; ++i) body(w, i);
                    }
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed = true;
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

ChromosomeModel train_model(std::span<const ConnectionRecord> training, double range) {
    return precalculate(training, range, fit_normalization(training));
}

std::string format_train_summary(const ChromosomeModel& model) {
    std::ostringstream os;
    os << "training records: " << model.training_size << '\n'
       << "range: " << format_real(model.range_used) << '\n'
       << "groups: " << model.groups.size() << '\n'
       << "chromosomes: " << model.chromosome_count() << '\n';
    for (const auto& group : model.groups) {
        std::uint64_t members = 0;
        for (const auto& c : group.chromosomes) members += c.member_count;
        os << "  " << group.label << " (" << to_string(group.category) << "): " << group.chromosomes.size()
           << " chromosomes, " << members << " records\n";
    }
    return os.str();
}

std::vector<Prediction> detect_batch(std::span<const ConnectionRecord> records, const ChromosomeModel& model,
                                     const GaParams& params, std::size_t workers) {
    params.validate();
    if (model.empty()) throw Error(ErrorKind::EmptyModel, "model has no chromosomes");
    std::vector<Prediction> out(records.size());
    parallel_for(records.size(), workers, [&](std::size_t, std::size_t i) {
        Rng rng = Rng::for_record(params.seed, i);
        out[i] = detect(records[i], model, params, rng);
    });
    return out;
}

ConfusionMatrix evaluate_batch(std::span<const ConnectionRecord> records, const ChromosomeModel& model,
                               const GaParams& params, std::size_t workers) {
    params.validate();
    if (model.empty()) throw Error(ErrorKind::EmptyModel, "model has no chromosomes");
    workers = std::max<std::size_t>(workers, 1);
    std::vector<ConfusionMatrix> shards(workers);
    parallel_for(records.size(), workers, [&](std::size_t w, std::size_t i) {
        Rng rng = Rng::for_record(params.seed, i);
        const Prediction p = detect(records[i], model, params, rng);
        ++shards[w].at(records[i].category, p.category);
    });
    ConfusionMatrix total;
    for (const auto& shard : shards) total += shard;
    return total;
}

std::string format_prediction_row(std::size_t index, const Prediction& prediction) {
    return std::to_string(index) + ',' + prediction.attack_name + ',' + std::string(to_string(prediction.category)) +
           ',' + format_real(prediction.survivor_fitness) + ',' + std::to_string(prediction.generations_run);
}

}  // namespace gaids
