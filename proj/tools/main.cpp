// Command-line front end: dataset generation, chunked all-vs-all alignment,
// benchmarking, and the analytical accelerator calculators.
//
// Exit codes: 0 success, 1 usage or model-range error, 2 data error.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bitaln/accel_model.hpp"
#include "bitaln/dataset.hpp"
#include "bitaln/engine.hpp"
#include "bitaln/errors.hpp"
#include "bitaln/fastx.hpp"
#include "bitaln/result_io.hpp"

using nlohmann::json;

namespace {

int fail(int code, const char* kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
    return code;
}

bool to_count(double v, std::uint64_t& out) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 9.0e15) return false;
    out = static_cast<std::uint64_t>(v);
    return true;
}

double mean_length(std::span<const bitaln::nuc_seq> seqs) {
    std::uint64_t total = 0;
    for (const auto& s : seqs) total += s.size();
    return static_cast<double>(total) / static_cast<double>(seqs.size());
}

// ---- gen ----------------------------------------------------------------

struct gen_args {
    double count = 0;
    std::uint32_t len = 0;
    std::string len_range;
    std::uint64_t seed = 0;
    std::string out_path;
};

int run_gen(const gen_args& a) {
    std::uint64_t count = 0;
    if (!to_count(a.count, count)) return fail(1, "usage", "--count must be a positive integer");

    bitaln::dataset_spec spec;
    spec.count = count;
    spec.seed = a.seed;
    if (!a.len_range.empty()) {
        auto colon = a.len_range.find(':');
        std::uint32_t lo = 0;
        std::uint32_t hi = 0;
        try {
            lo = static_cast<std::uint32_t>(std::stoul(a.len_range.substr(0, colon)));
            hi = static_cast<std::uint32_t>(std::stoul(a.len_range.substr(colon + 1)));
        } catch (const std::exception&) {
            colon = std::string::npos;
        }
        if (colon == std::string::npos || lo == 0 || lo > hi)
            return fail(1, "usage", "--len-range expects MIN:MAX with 1 <= MIN <= MAX");
        spec.min_len = lo;
        spec.max_len = hi;
    } else {
        if (a.len == 0) return fail(1, "usage", "one of --len or --len-range is required");
        spec.min_len = spec.max_len = a.len;
    }

    const auto reads = bitaln::generate_dataset(spec);
    bitaln::write_fasta_file(a.out_path, reads);

    std::uint32_t lo = reads.front().size();
    std::uint32_t hi = lo;
    for (const auto& r : reads) {
        lo = std::min(lo, r.size());
        hi = std::max(hi, r.size());
    }
    std::printf("wrote %llu reads to %s (length %u..%u, mean %.1f)\n",
                static_cast<unsigned long long>(reads.size()), a.out_path.c_str(), lo, hi,
                mean_length(reads));
    return 0;
}

// ---- align / bench ------------------------------------------------------

struct align_args {
    std::string queries_path;
    std::string targets_path;
    std::optional<std::int32_t> k;
    std::size_t buffer = 10240;
    unsigned workers = 0;
    std::uint32_t max_len = 360;
    std::string format = "tsv";
    std::string out_path;
    std::string metrics_path;
    bool sorted = false;
    bool score_only = false;
    bool lenient = false;
    std::uint64_t repeat = 1;  // bench only
};

bitaln::engine_config config_from(const align_args& a) {
    bitaln::engine_config cfg;
    cfg.buffer_capacity = a.buffer;
    cfg.workers = a.workers;
    cfg.k = a.k;
    cfg.max_len = a.max_len;
    cfg.emit = a.score_only ? bitaln::emit_mode::score_only : bitaln::emit_mode::score_and_end;
    return cfg;
}

json metrics_json(const bitaln::run_metrics& m, const bitaln::engine_config& cfg,
                  double gcups_theoretical, unsigned effective_workers) {
    return json{{"pairs", m.pair_count},
                {"cells", m.cell_count},
                {"seconds", m.wall_seconds},
                {"gcups", m.gcups},
                {"gcups_theoretical", gcups_theoretical},
                {"chunks", m.chunk_count},
                {"workers", effective_workers},
                {"buffer", cfg.buffer_capacity}};
}

unsigned resolved_workers(unsigned requested) {
    return requested ? requested : std::max(1u, std::thread::hardware_concurrency());
}

int run_align(const align_args& a) {
    const auto policy = a.lenient ? bitaln::base_policy::lenient : bitaln::base_policy::strict;
    const auto queries = bitaln::parse_fastx_file(a.queries_path, policy);
    const auto targets = bitaln::parse_fastx_file(a.targets_path, policy);
    const auto cfg = config_from(a);

    std::ofstream file_out;
    if (!a.out_path.empty()) {
        file_out.open(a.out_path);
        if (!file_out) return fail(2, "data", "cannot open output file: " + a.out_path);
    }
    std::ostream& out = a.out_path.empty() ? std::cout : file_out;

    bitaln::run_metrics metrics;
    if (a.sorted) {
        auto [results, m] = bitaln::run_all_vs_all(queries, targets, cfg);
        metrics = m;
        bitaln::sort_results(results);  // collected results are already canonical; keep the contract explicit
        if (a.format == "ndjson")
            bitaln::write_results_ndjson(out, results, queries, targets, cfg.emit);
        else
            bitaln::write_results_tsv(out, results, queries, targets, cfg.emit);
    } else if (a.format == "ndjson") {
        bitaln::ndjson_sink sink(out, queries, targets, cfg.emit);
        metrics = bitaln::run_all_vs_all(queries, targets, cfg, sink);
    } else {
        bitaln::tsv_sink sink(out, queries, targets, cfg.emit);
        metrics = bitaln::run_all_vs_all(queries, targets, cfg, sink);
    }
    out.flush();

    const auto est = bitaln::model::theoretical_cups(bitaln::model::accel_params{},
                                                     mean_length(queries), mean_length(targets));
    const json mj = metrics_json(metrics, cfg, est.gcups_th, resolved_workers(a.workers));
    if (!a.metrics_path.empty()) {
        std::ofstream mf(a.metrics_path);
        if (!mf) return fail(2, "data", "cannot open metrics file: " + a.metrics_path);
        mf << mj.dump(2) << "\n";
    }
    std::fprintf(stderr, "aligned %llu pairs (%llu cells) in %.4f s: %.2f GCUPS host, %.1f GCUPS reference model\n",
                 static_cast<unsigned long long>(metrics.pair_count),
                 static_cast<unsigned long long>(metrics.cell_count), metrics.wall_seconds,
                 metrics.gcups, est.gcups_th);
    return 0;
}

int run_bench(const align_args& a) {
    if (a.repeat < 1) return fail(1, "usage", "--repeat must be >= 1");
    const auto policy = a.lenient ? bitaln::base_policy::lenient : bitaln::base_policy::strict;
    const auto queries = bitaln::parse_fastx_file(a.queries_path, policy);
    const auto targets = bitaln::parse_fastx_file(a.targets_path, policy);
    const auto cfg = config_from(a);

    std::vector<double> gcups;
    std::uint64_t first_digest = 0;
    for (std::uint64_t r = 0; r < a.repeat; ++r) {
        bitaln::checksum_sink sink;
        const auto metrics = bitaln::run_all_vs_all(queries, targets, cfg, sink);
        gcups.push_back(metrics.gcups);
        if (r == 0)
            first_digest = sink.digest();
        else if (sink.digest() != first_digest)
            return fail(2, "data", "result checksum changed between repeats");
        std::printf("repeat %llu: %.4f s, %.2f GCUPS (checksum %016llx, %llu records)\n",
                    static_cast<unsigned long long>(r + 1), metrics.wall_seconds, metrics.gcups,
                    static_cast<unsigned long long>(sink.digest()),
                    static_cast<unsigned long long>(sink.count()));
    }

    const double mean = std::accumulate(gcups.begin(), gcups.end(), 0.0) / gcups.size();
    double var = 0.0;
    for (double g : gcups) var += (g - mean) * (g - mean);
    const double stddev = gcups.size() > 1 ? std::sqrt(var / (gcups.size() - 1)) : 0.0;
    std::printf("aggregate: mean %.2f GCUPS, stddev %.2f GCUPS (%.2f%% of mean)\n", mean, stddev,
                mean > 0 ? 100.0 * stddev / mean : 0.0);
    return 0;
}

// ---- model --------------------------------------------------------------

void print_report(bool as_json, const json& inputs, const json& outputs,
                  const std::string& formula_id, const std::string& human_line) {
    std::printf("%s\n", human_line.c_str());
    if (as_json) {
        std::cout << json{{"inputs", inputs}, {"outputs", outputs}, {"formula_id", formula_id}}
                         .dump(2)
                  << "\n";
    }
}

std::string format_line(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bit-parallel all-vs-all sequence aligner and accelerator model calculator"};
    app.require_subcommand(1);

    // gen
    gen_args ga;
    auto* gen = app.add_subcommand("gen", "generate a seeded synthetic FASTA read set");
    gen->add_option("--count", ga.count, "number of reads (accepts 1e5 notation)")->required();
    auto* len_opt = gen->add_option("--len", ga.len, "fixed read length");
    auto* range_opt =
        gen->add_option("--len-range", ga.len_range, "uniform length range MIN:MAX");
    len_opt->excludes(range_opt);
    range_opt->excludes(len_opt);
    gen->add_option("--seed", ga.seed, "generator seed");
    gen->add_option("--out", ga.out_path, "output FASTA path")->required();

    // align / bench share flags
    align_args aa;
    auto add_align_flags = [&aa](CLI::App* cmd) {
        cmd->add_option("--queries", aa.queries_path, "query FASTA/FASTQ file")->required();
        cmd->add_option("--targets", aa.targets_path, "target FASTA/FASTQ file")->required();
        cmd->add_option("--k", aa.k, "report threshold (defaults to query length)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--buffer", aa.buffer, "query chunk capacity")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--workers", aa.workers, "worker threads (0 = hardware)");
        cmd->add_option("--max-len", aa.max_len, "maximum accepted sequence length")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--lenient", aa.lenient, "accept non-ACGT bases as match-nothing wildcards");
    };

    auto* align = app.add_subcommand("align", "all-vs-all pairwise alignment");
    add_align_flags(align);
    align->add_option("--format", aa.format, "output format")
        ->check(CLI::IsMember({"tsv", "ndjson"}));
    align->add_option("--out", aa.out_path, "result file (default: stdout)");
    align->add_option("--metrics", aa.metrics_path, "write run metrics JSON here");
    align->add_flag("--sorted", aa.sorted, "sort output by (query, target) index");
    align->add_flag("--score-only", aa.score_only, "emit min_score only");

    auto* bench = app.add_subcommand("bench", "repeat an alignment run and report GCUPS stats");
    add_align_flags(bench);
    bench->add_option("--repeat", aa.repeat, "number of repetitions")->required();

    // model
    auto* model = app.add_subcommand("model", "analytical accelerator calculators");
    model->require_subcommand(1);
    bool as_json = false;
    model->add_flag("--json", as_json, "also print a JSON report");

    double m_freq = 220e6, m_workers = 42, m_qlen = 0, m_tlen = 0;
    auto* throughput = model->add_subcommand("throughput", "theoretical pair and cell rates");
    throughput->add_option("--freq", m_freq, "clock frequency in Hz");
    throughput->add_option("--workers", m_workers, "parallel workers");
    throughput->add_option("--qlen", m_qlen, "average query length")->required();
    throughput->add_option("--tlen", m_tlen, "average target length (default: --qlen)");

    double t_queries = 0, t_targets = 0, t_len = 100, t_bandwidth = 25.6e9;
    double t_buffer = 0;
    bool t_ceil = false;
    auto* transfer = model->add_subcommand("transfer", "DRAM traffic for buffered all-vs-all");
    transfer->add_option("--queries", t_queries, "number of query sequences")->required();
    transfer->add_option("--targets", t_targets, "number of target sequences")->required();
    transfer->add_option("--len", t_len, "average sequence length in bytes");
    auto* buf_opt = transfer->add_option("--buffer", t_buffer, "query buffer capacity");
    transfer->add_option("--bandwidth", t_bandwidth, "memory bandwidth in bytes/s");
    transfer->add_flag("--ceil-passes", t_ceil, "round chunk passes up to whole numbers");

    double p_alpha = 0, p_ppc = 60, p_pfpga = 25, p_seconds = 0, p_standalone = 0, p_speedup = 0;
    auto* power = model->add_subcommand("power", "whole-system power and break-even utilization");
    power->add_option("--alpha", p_alpha, "host utilization by unrelated tasks [0,1]")->required();
    power->add_option("--ppc", p_ppc, "idle host power in W");
    power->add_option("--pfpga", p_pfpga, "attached accelerator power in W");
    auto* secs_opt = power->add_option("--seconds", p_seconds, "task duration for energy");
    auto* stand_opt =
        power->add_option("--standalone-power", p_standalone, "standalone system power in W");
    auto* speed_opt = power->add_option("--speedup", p_speedup, "attached-system speedup factor");
    stand_opt->needs(speed_opt);
    speed_opt->needs(stand_opt);

    double pr_queries = 0, pr_targets = 0, pr_tlen = 0, pr_freq = 220e6, pr_workers = 42,
           pr_board = 9.9;
    auto* predict = model->add_subcommand("predict", "workload runtime and energy");
    predict->add_option("--queries", pr_queries, "number of query sequences")->required();
    predict->add_option("--targets", pr_targets, "number of target sequences")->required();
    predict->add_option("--tlen", pr_tlen, "average target length")->required();
    predict->add_option("--freq", pr_freq, "clock frequency in Hz");
    predict->add_option("--workers", pr_workers, "parallel workers");
    predict->add_option("--board-power", pr_board, "board power in W");

    double g_cells = 0, g_energy = 0;
    auto* gcupj_cmd = model->add_subcommand("gcupj", "energy efficiency in giga-cells per joule");
    gcupj_cmd->add_option("--cells", g_cells, "DP cells computed")->required();
    gcupj_cmd->add_option("--energy", g_energy, "energy in joules")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) return run_gen(ga);
        if (align->parsed()) return run_align(aa);
        if (bench->parsed()) return run_bench(aa);

        if (throughput->parsed()) {
            const double tlen = throughput->count("--tlen") ? m_tlen : m_qlen;
            bitaln::model::accel_params p;
            p.clock_hz = m_freq;
            p.workers = m_workers;
            const auto est = bitaln::model::theoretical_cups(p, m_qlen, tlen);
            print_report(as_json,
                         json{{"freq_hz", m_freq},
                              {"workers", m_workers},
                              {"avg_query_len", m_qlen},
                              {"avg_target_len", tlen}},
                         json{{"pcps", est.pcps_th},
                              {"avg_nc", est.avg_nc},
                              {"cups", est.cups_th},
                              {"gcups", est.gcups_th}},
                         "eq3",
                         format_line("%.1f GCUPS (%.6g pairs/s, %.6g cells/pair)", est.gcups_th,
                                     est.pcps_th, est.avg_nc));
            return 0;
        }
        if (transfer->parsed()) {
            std::optional<double> buffer;
            if (buf_opt->count()) {
                if (t_buffer < 1) return fail(1, "usage", "--buffer must be >= 1");
                buffer = t_buffer;
            }
            if (t_queries < 1 || t_targets < 1 || t_len <= 0 || t_bandwidth <= 0)
                return fail(1, "usage", "transfer inputs must be positive");
            bitaln::model::accel_params p;
            p.dram_bandwidth = t_bandwidth;
            const auto est =
                bitaln::model::transfer_model(t_queries, t_targets, t_len, buffer, p, t_ceil);
            json inputs{{"queries", t_queries}, {"targets", t_targets},      {"avg_len", t_len},
                        {"bandwidth", t_bandwidth}, {"ceil_passes", t_ceil}};
            inputs["buffer"] = buffer ? json(*buffer) : json(nullptr);
            print_report(as_json, inputs,
                         json{{"bytes", est.bytes_total}, {"gib", est.gib},
                              {"seconds", est.seconds}},
                         "table1", format_line("%.1f GiB, %.1f s", est.gib, est.seconds));
            return 0;
        }
        if (power->parsed()) {
            const double watts = bitaln::model::system_power(p_alpha, p_ppc, p_pfpga);
            std::string line = format_line("%.10g W", watts);
            json outputs{{"watts", watts}};
            if (secs_opt->count()) {
                const auto sc = bitaln::model::power_over(p_alpha, p_ppc, p_pfpga, p_seconds);
                line += format_line("; %.1f J over %.4g s", sc.energy_joules, p_seconds);
                outputs["joules"] = sc.energy_joules;
                outputs["seconds"] = p_seconds;
            }
            if (stand_opt->count()) {
                const double alpha_star = bitaln::model::break_even_utilization(
                    p_ppc, p_pfpga, p_standalone, p_speedup);
                line += format_line("; break-even utilization %.3f", alpha_star);
                outputs["break_even_alpha"] = alpha_star;
            }
            print_report(as_json,
                         json{{"alpha", p_alpha},
                              {"host_power", p_ppc},
                              {"fpga_power", p_pfpga},
                              {"standalone_power", stand_opt->count() ? json(p_standalone)
                                                                      : json(nullptr)},
                              {"speedup", speed_opt->count() ? json(p_speedup) : json(nullptr)}},
                         outputs, "eq4", line);
            return 0;
        }
        if (predict->parsed()) {
            if (pr_queries < 1 || pr_targets < 1)
                return fail(1, "usage", "--queries and --targets must be >= 1");
            bitaln::model::accel_params p;
            p.clock_hz = pr_freq;
            p.workers = pr_workers;
            p.board_power = pr_board;
            const auto est =
                bitaln::model::predict_runtime_energy(pr_queries, pr_targets, pr_tlen, p);
            print_report(as_json,
                         json{{"queries", pr_queries},
                              {"targets", pr_targets},
                              {"avg_target_len", pr_tlen},
                              {"freq_hz", pr_freq},
                              {"workers", pr_workers},
                              {"board_power", pr_board}},
                         json{{"seconds", est.seconds}, {"joules", est.joules}}, "predict",
                         format_line("%.3f s, %.3f J", est.seconds, est.joules));
            return 0;
        }
        if (gcupj_cmd->parsed()) {
            const double eff = bitaln::model::gcupj(g_cells, g_energy);
            print_report(as_json, json{{"cells", g_cells}, {"energy_joules", g_energy}},
                         json{{"gcupj", eff}}, "gcupj", format_line("%.1f GCUPJ", eff));
            return 0;
        }
        return fail(1, "usage", "no subcommand selected");
    } catch (const bitaln::non_positive_length_error& e) {
        return fail(1, "usage", e.what());
    } catch (const bitaln::alpha_out_of_range_error& e) {
        return fail(1, "usage", e.what());
    } catch (const bitaln::non_positive_energy_error& e) {
        return fail(1, "usage", e.what());
    } catch (const bitaln::infeasible_error& e) {
        return fail(1, "usage", e.what());
    } catch (const bitaln::error& e) {
        return fail(2, "data", e.what());
    } catch (const std::exception& e) {
        return fail(2, "data", e.what());
    }
}
