#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bitaln/engine.hpp"

namespace bitaln {

// Sinks that turn pair results into the supported output formats. Row order
// is the engine's task-completion order; use sort_results for canonical
// (query_index, target_index) order.

class tsv_sink : public result_sink {
public:
    // Writes the header line immediately.
    tsv_sink(std::ostream& out, std::span<const nuc_seq> queries,
             std::span<const nuc_seq> targets, emit_mode emit = emit_mode::score_and_end);
    void consume(std::span<const pair_result> batch) override;

private:
    std::ostream& out_;
    std::span<const nuc_seq> queries_;
    std::span<const nuc_seq> targets_;
    emit_mode emit_;
};

// One JSON object per line with the same fields as the TSV columns.
class ndjson_sink : public result_sink {
public:
    ndjson_sink(std::ostream& out, std::span<const nuc_seq> queries,
                std::span<const nuc_seq> targets, emit_mode emit = emit_mode::score_and_end);
    void consume(std::span<const pair_result> batch) override;

private:
    std::ostream& out_;
    std::span<const nuc_seq> queries_;
    std::span<const nuc_seq> targets_;
    emit_mode emit_;
};

// Order-independent digest over all consumed records; equal result multisets
// give equal digests regardless of completion order.
class checksum_sink : public result_sink {
public:
    void consume(std::span<const pair_result> batch) override;
    std::uint64_t digest() const noexcept { return digest_; }
    std::uint64_t count() const noexcept { return count_; }

private:
    std::uint64_t digest_ = 0;
    std::uint64_t count_ = 0;
};

void sort_results(std::vector<pair_result>& results);

void write_results_tsv(std::ostream& out, std::span<const pair_result> results,
                       std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
                       emit_mode emit = emit_mode::score_and_end);
void write_results_ndjson(std::ostream& out, std::span<const pair_result> results,
                          std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
                          emit_mode emit = emit_mode::score_and_end);

}  // namespace bitaln
