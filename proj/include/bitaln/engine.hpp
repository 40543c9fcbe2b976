#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bitaln/myers.hpp"
#include "bitaln/nucseq.hpp"

namespace bitaln {

enum class emit_mode { score_only, score_and_end };

// Chunked all-vs-all execution: queries are processed in chunks of
// buffer_capacity, their peq tables built once per chunk and shared
// read-only across workers; every target is then streamed against the
// buffered chunk. One task = one target against the whole chunk.
struct engine_config {
    std::size_t buffer_capacity = 10240;
    unsigned workers = 0;  // 0 -> hardware concurrency
    std::optional<std::int32_t> k;
    std::uint32_t max_len = 360;
    emit_mode emit = emit_mode::score_and_end;
};

struct pair_result {
    std::uint32_t query_index = 0;
    std::uint32_t target_index = 0;
    std::int32_t min_score = 0;
    std::uint32_t best_end = 0;
    std::int32_t final_score = 0;

    friend bool operator==(const pair_result&, const pair_result&) = default;
};

struct run_metrics {
    std::uint64_t pair_count = 0;
    std::uint64_t cell_count = 0;  // sum over pairs of m_i * n_j
    double wall_seconds = 0.0;
    double gcups = 0.0;
    std::size_t chunk_count = 0;
};

// Contiguous, disjoint, covering chunks; all but possibly the last have
// size `capacity`.
std::vector<std::pair<std::size_t, std::size_t>> chunk_plan(std::size_t num_queries,
                                                            std::size_t capacity);

// Receives finished pairs in task-completion order; one call per task
// (one target against one query chunk). Calls are serialized by the engine.
class result_sink {
public:
    virtual ~result_sink() = default;
    virtual void consume(std::span<const pair_result> batch) = 0;
};

// Streams |Q| x |T| results into `sink`. The result multiset depends only on
// (queries, targets, k), never on worker count or buffer capacity. Throws
// empty_dataset_error and sequence_too_long_error before any work starts.
run_metrics run_all_vs_all(std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
                           const engine_config& config, result_sink& sink);

// Convenience overload collecting results indexed by (query, target); the
// returned vector is ordered by query_index major, target_index minor.
std::pair<std::vector<pair_result>, run_metrics> run_all_vs_all(
    std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
    const engine_config& config = {});

// Cell/time accounting: pair_count = |Q| x |T|,
// cell_count = (sum of query lengths) x (sum of target lengths),
// gcups = cell_count / (1e9 x wall_seconds). wall_seconds must be > 0.
run_metrics compute_metrics(std::span<const std::uint32_t> query_lengths,
                            std::span<const std::uint32_t> target_lengths,
                            double wall_seconds, std::size_t buffer_capacity);

}  // namespace bitaln
