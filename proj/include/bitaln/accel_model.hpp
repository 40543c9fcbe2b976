#pragma once

#include <cstdint>
#include <optional>

#include "bitaln/errors.hpp"

namespace bitaln::model {

// Analytical model of a worker-based FPGA aligner: each of W workers retires
// one DP column per cycle at clock F, so a pair of average target length Lt
// takes Lt cycles and one worker-cycle updates Lq cells. The transfer model
// accounts DRAM traffic for the chunked all-vs-all scheme, and the power
// model compares a standalone board against an accelerator card whose host
// server can be shared with unrelated work.

struct accel_params {
    double clock_hz = 220e6;            // accelerator clock F
    double workers = 42;                // parallel matching workers W
    double dram_bandwidth = 25.6e9;     // bytes/s, one 64-bit DDR4-3200 channel
    double board_power = 9.9;           // W, whole standalone board under load
    double host_idle_power = 60.0;      // W, idle server hosting an FPGA card
    double attached_fpga_power = 25.0;  // W, the card itself
};

struct throughput_estimate {
    double pcps_th = 0.0;   // pair comparisons / s = F * W / Lt
    double avg_nc = 0.0;    // DP cells per pair = Lt * Lq
    double cups_th = 0.0;   // cell updates / s = pcps_th * avg_nc = F * W * Lq
    double gcups_th = 0.0;  // cups_th / 1e9
};

struct transfer_estimate {
    double bytes_total = 0.0;
    double gib = 0.0;      // bytes_total / 2^30
    double seconds = 0.0;  // bytes_total / dram_bandwidth
};

struct power_scenario {
    double alpha = 0.0;        // host utilization by unrelated tasks, [0, 1]
    double total_power = 0.0;  // (1 - alpha) * P_host + P_fpga
    double task_seconds = 0.0;
    double energy_joules = 0.0;
};

// Theoretical pair-comparison rate F * W / avg_target_len.
double theoretical_pcps(const accel_params& params, double avg_target_len);

// Theoretical cell-update rate; cups_th == pcps_th * avg_nc by construction.
throughput_estimate theoretical_cups(const accel_params& params, double avg_query_len,
                                     double avg_target_len);

// DRAM traffic for all-vs-all with a query buffer of capacity B: every chunk
// pass streams all targets once, and each query is loaded once. Sequences
// count avg_len bytes each (ASCII in system memory). Without a buffer each
// query forces its own pass over the targets. pass count is the exact ratio
// num_queries / B unless ceil_passes is set.
transfer_estimate transfer_model(double num_queries, double num_targets, double avg_len,
                                 std::optional<double> buffer_capacity,
                                 const accel_params& params = {}, bool ceil_passes = false);

// Whole-system draw (1 - alpha) * host_power + fpga_power.
double system_power(double alpha, double host_power, double fpga_power);

power_scenario power_over(double alpha, double host_power, double fpga_power,
                          double task_seconds);

// Smallest host utilization alpha at which running the task on the attached
// card costs no more energy than the standalone system, given the card is
// `speedup` times faster. Throws infeasible_error when no alpha in [0, 1]
// satisfies it.
double break_even_utilization(double host_power, double attached_fpga_power,
                              double standalone_power, double speedup);

// Giga cell updates per joule.
double gcupj(double cell_count, double energy_joules);

// Workload runtime from the pair rate, and energy at board power.
struct runtime_energy {
    double seconds = 0.0;
    double joules = 0.0;
};
runtime_energy predict_runtime_energy(double num_queries, double num_targets,
                                      double avg_target_len, const accel_params& params = {});

}  // namespace bitaln::model
