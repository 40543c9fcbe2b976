#include "bitaln/accel_model.hpp"

#include <cmath>

namespace bitaln::model {

double theoretical_pcps(const accel_params& params, double avg_target_len) {
    if (avg_target_len <= 0.0) throw non_positive_length_error();
    return params.clock_hz * params.workers / avg_target_len;
}

throughput_estimate theoretical_cups(const accel_params& params, double avg_query_len,
                                     double avg_target_len) {
    if (avg_query_len <= 0.0 || avg_target_len <= 0.0) throw non_positive_length_error();
    throughput_estimate est;
    est.pcps_th = theoretical_pcps(params, avg_target_len);
    est.avg_nc = avg_target_len * avg_query_len;
    est.cups_th = est.pcps_th * est.avg_nc;  // == F * W * avg_query_len
    est.gcups_th = est.cups_th / 1e9;
    return est;
}

transfer_estimate transfer_model(double num_queries, double num_targets, double avg_len,
                                 std::optional<double> buffer_capacity,
                                 const accel_params& params, bool ceil_passes) {
    double passes = num_queries;
    if (buffer_capacity) {
        passes = num_queries / *buffer_capacity;
        if (ceil_passes) passes = std::ceil(passes);
    }
    transfer_estimate est;
    est.bytes_total = passes * num_targets * avg_len + num_queries * avg_len;
    est.gib = est.bytes_total / 1073741824.0;
    est.seconds = est.bytes_total / params.dram_bandwidth;
    return est;
}

double system_power(double alpha, double host_power, double fpga_power) {
    if (alpha < 0.0 || alpha > 1.0) throw alpha_out_of_range_error(alpha);
    return (1.0 - alpha) * host_power + fpga_power;
}

power_scenario power_over(double alpha, double host_power, double fpga_power,
                          double task_seconds) {
    power_scenario s;
    s.alpha = alpha;
    s.total_power = system_power(alpha, host_power, fpga_power);
    s.task_seconds = task_seconds;
    s.energy_joules = s.total_power * task_seconds;
    return s;
}

double break_even_utilization(double host_power, double attached_fpga_power,
                              double standalone_power, double speedup) {
    // Energy parity: ((1 - alpha) * P_host + P_fpga) * T / speedup
    //             <= P_standalone * T
    const double budget = standalone_power * speedup - attached_fpga_power;
    if (budget < 0.0)
        throw infeasible_error("attached system uses more energy even at full host utilization");
    if (host_power == 0.0) return 0.0;
    const double alpha = 1.0 - budget / host_power;
    return alpha < 0.0 ? 0.0 : alpha;
}

double gcupj(double cell_count, double energy_joules) {
    if (energy_joules <= 0.0) throw non_positive_energy_error();
    return cell_count / 1e9 / energy_joules;
}

runtime_energy predict_runtime_energy(double num_queries, double num_targets,
                                      double avg_target_len, const accel_params& params) {
    runtime_energy out;
    out.seconds = num_queries * num_targets / theoretical_pcps(params, avg_target_len);
    out.joules = out.seconds * params.board_power;
    return out;
}

}  // namespace bitaln::model
