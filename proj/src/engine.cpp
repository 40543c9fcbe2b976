#include "bitaln/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bitaln/errors.hpp"

namespace bitaln {

std::vector<std::pair<std::size_t, std::size_t>> chunk_plan(std::size_t num_queries,
                                                            std::size_t capacity) {
    if (capacity == 0) throw std::invalid_argument("chunk capacity must be >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> plan;
    for (std::size_t begin = 0; begin < num_queries; begin += capacity) {
        plan.emplace_back(begin, std::min(begin + capacity, num_queries));
    }
    return plan;
}

run_metrics compute_metrics(std::span<const std::uint32_t> query_lengths,
                            std::span<const std::uint32_t> target_lengths,
                            double wall_seconds, std::size_t buffer_capacity) {
    if (wall_seconds <= 0.0) throw std::invalid_argument("wall_seconds must be > 0");
    std::uint64_t sum_q = 0;
    std::uint64_t sum_t = 0;
    for (auto l : query_lengths) sum_q += l;
    for (auto l : target_lengths) sum_t += l;

    run_metrics m;
    m.pair_count = std::uint64_t(query_lengths.size()) * target_lengths.size();
    m.cell_count = sum_q * sum_t;
    m.wall_seconds = wall_seconds;
    m.gcups = static_cast<double>(m.cell_count) / 1e9 / wall_seconds;
    m.chunk_count = query_lengths.empty()
                        ? 0
                        : (query_lengths.size() + buffer_capacity - 1) / buffer_capacity;
    return m;
}

namespace {

void validate_inputs(std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
                     std::uint32_t max_len) {
    if (queries.empty() || targets.empty()) throw empty_dataset_error();
    for (const auto& s : queries) {
        if (s.size() > max_len) throw sequence_too_long_error(s.id(), s.size(), max_len);
    }
    for (const auto& s : targets) {
        if (s.size() > max_len) throw sequence_too_long_error(s.id(), s.size(), max_len);
    }
}

// Either streams each task's batch into `sink`, or (when `slots` is set)
// writes every result into its (query, target) slot. Slots are disjoint per
// task, so slot mode needs no synchronization.
run_metrics engine_run(std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
                       const engine_config& config, result_sink* sink, pair_result* slots) {
    validate_inputs(queries, targets, config.max_len);

    unsigned workers = config.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    const auto plan = chunk_plan(queries.size(), config.buffer_capacity);
    const std::size_t num_targets = targets.size();
    const auto start = std::chrono::steady_clock::now();

    for (const auto& [chunk_begin, chunk_end] : plan) {
        std::vector<peq_table> peqs;
        peqs.reserve(chunk_end - chunk_begin);
        for (std::size_t i = chunk_begin; i < chunk_end; ++i) peqs.emplace_back(queries[i]);

        std::atomic<std::size_t> next_target{0};
        std::atomic<bool> abort{false};
        std::mutex sink_mutex;
        std::mutex error_mutex;
        std::exception_ptr worker_error;

        auto worker_body = [&] {
            std::vector<pair_result> batch;
            batch.reserve(chunk_end - chunk_begin);
            try {
                while (!abort.load(std::memory_order_relaxed)) {
                    const std::size_t j = next_target.fetch_add(1, std::memory_order_relaxed);
                    if (j >= num_targets) break;
                    batch.clear();
                    for (std::size_t i = chunk_begin; i < chunk_end; ++i) {
                        const auto& peq = peqs[i - chunk_begin];
                        scan_options opts;
                        if (config.k) {
                            opts.k = std::min(*config.k,
                                              static_cast<std::int32_t>(peq.query_len()));
                        }
                        const scan_result r = myers_scan(peq, targets[j], opts);
                        const pair_result pr{static_cast<std::uint32_t>(i),
                                             static_cast<std::uint32_t>(j), r.min_score,
                                             r.best_end, r.final_score};
                        if (slots)
                            slots[i * num_targets + j] = pr;
                        else
                            batch.push_back(pr);
                    }
                    if (sink) {
                        std::lock_guard<std::mutex> lock(sink_mutex);
                        sink->consume(batch);
                    }
                }
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!worker_error) worker_error = std::current_exception();
                }
                abort.store(true, std::memory_order_relaxed);
            }
        };

        if (workers == 1) {
            worker_body();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_body);
            for (auto& t : pool) t.join();
        }
        if (worker_error) std::rethrow_exception(worker_error);
    }

    const double seconds = std::max(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1e-9);

    std::vector<std::uint32_t> qlens;
    std::vector<std::uint32_t> tlens;
    qlens.reserve(queries.size());
    tlens.reserve(targets.size());
    for (const auto& s : queries) qlens.push_back(s.size());
    for (const auto& s : targets) tlens.push_back(s.size());
    return compute_metrics(qlens, tlens, seconds, config.buffer_capacity);
}

}  // namespace

run_metrics run_all_vs_all(std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
                           const engine_config& config, result_sink& sink) {
    return engine_run(queries, targets, config, &sink, nullptr);
}

std::pair<std::vector<pair_result>, run_metrics> run_all_vs_all(
    std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
    const engine_config& config) {
    validate_inputs(queries, targets, config.max_len);
    std::vector<pair_result> results(queries.size() * targets.size());
    run_metrics metrics = engine_run(queries, targets, config, nullptr, results.data());
    return {std::move(results), metrics};
}

}  // namespace bitaln
