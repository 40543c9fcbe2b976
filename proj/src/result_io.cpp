#include "bitaln/result_io.hpp"

#include <algorithm>
#include <ostream>

namespace bitaln {

namespace {

void write_tsv_header(std::ostream& out, emit_mode emit) {
    if (emit == emit_mode::score_only)
        out << "query_id\ttarget_id\tmin_score\n";
    else
        out << "query_id\ttarget_id\tmin_score\tbest_end\tfinal_score\n";
}

void write_tsv_row(std::ostream& out, const pair_result& r, std::span<const nuc_seq> queries,
                   std::span<const nuc_seq> targets, emit_mode emit) {
    out << queries[r.query_index].id() << '\t' << targets[r.target_index].id() << '\t'
        << r.min_score;
    if (emit == emit_mode::score_and_end) out << '\t' << r.best_end << '\t' << r.final_score;
    out << '\n';
}

void write_ndjson_row(std::ostream& out, const pair_result& r, std::span<const nuc_seq> queries,
                      std::span<const nuc_seq> targets, emit_mode emit) {
    out << "{\"query_id\":\"" << queries[r.query_index].id() << "\",\"target_id\":\""
        << targets[r.target_index].id() << "\",\"min_score\":" << r.min_score;
    if (emit == emit_mode::score_and_end)
        out << ",\"best_end\":" << r.best_end << ",\"final_score\":" << r.final_score;
    out << "}\n";
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t record_hash(const pair_result& r) {
    std::uint64_t h = mix64((std::uint64_t(r.query_index) << 32) | r.target_index);
    h = mix64(h ^ (std::uint64_t(std::uint32_t(r.min_score)) << 32 | r.best_end));
    h = mix64(h ^ std::uint32_t(r.final_score));
    return h;
}

}  // namespace

tsv_sink::tsv_sink(std::ostream& out, std::span<const nuc_seq> queries,
                   std::span<const nuc_seq> targets, emit_mode emit)
    : out_(out), queries_(queries), targets_(targets), emit_(emit) {
    write_tsv_header(out_, emit_);
}

void tsv_sink::consume(std::span<const pair_result> batch) {
    for (const auto& r : batch) write_tsv_row(out_, r, queries_, targets_, emit_);
}

ndjson_sink::ndjson_sink(std::ostream& out, std::span<const nuc_seq> queries,
                         std::span<const nuc_seq> targets, emit_mode emit)
    : out_(out), queries_(queries), targets_(targets), emit_(emit) {}

void ndjson_sink::consume(std::span<const pair_result> batch) {
    for (const auto& r : batch) write_ndjson_row(out_, r, queries_, targets_, emit_);
}

void checksum_sink::consume(std::span<const pair_result> batch) {
    // Commutative accumulation keeps the digest independent of arrival order.
    for (const auto& r : batch) digest_ += record_hash(r);
    count_ += batch.size();
}

void sort_results(std::vector<pair_result>& results) {
    std::sort(results.begin(), results.end(), [](const pair_result& a, const pair_result& b) {
        if (a.query_index != b.query_index) return a.query_index < b.query_index;
        return a.target_index < b.target_index;
    });
}

void write_results_tsv(std::ostream& out, std::span<const pair_result> results,
                       std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
                       emit_mode emit) {
    write_tsv_header(out, emit);
    for (const auto& r : results) write_tsv_row(out, r, queries, targets, emit);
}

void write_results_ndjson(std::ostream& out, std::span<const pair_result> results,
                          std::span<const nuc_seq> queries, std::span<const nuc_seq> targets,
                          emit_mode emit) {
    for (const auto& r : results) write_ndjson_row(out, r, queries, targets, emit);
}

}  // namespace bitaln
