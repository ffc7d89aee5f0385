#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bandlim/types.hpp"

namespace bandlim {

struct ExperimentConfig {
    GmmModel model;                // defaults to reference_gmm()
    std::vector<double> offsets;   // boundary positions c
    std::vector<long> ns;
    std::vector<int> ms;
    double sigma = 0.1;
    int trials = 100;
    std::uint64_t base_seed = 1;
    std::string outdir = ".";
    // recovery demo knobs
    long recovery_n = 200;
    double recovery_sigma = 0.5;
    int cutoff_order = 8;

    static ExperimentConfig fig2_defaults();
    static ExperimentConfig fig3_defaults();
    static ExperimentConfig recovery_defaults();
};

ExperimentConfig config_from_json(const std::string& text, const ExperimentConfig& defaults);
std::string config_to_json(const ExperimentConfig& config);

struct StatRow {
    long n = 0;
    int m = 0;
    double c = 0.0;
    int trials_used = 0;
    double mean_omega = 0.0;
    double std_omega = 0.0;
    double sup_p = 0.0;
    double prediction_m = 0.0;
    std::string variant = "corrected";
    int excluded = 0;  // degenerate or failed trials
};

struct SummaryStats {
    std::vector<StatRow> rows;
};

// Bandwidth-vs-sample-size sweep. Per trial: sample, build graph, estimate
// the indicator bandwidth. Deterministic in the base seed.
SummaryStats run_fig2(const ExperimentConfig& config);

// Bandwidth-vs-boundary-position sweep at fixed n and m.
SummaryStats run_fig3(const ExperimentConfig& config);

std::string stats_to_csv(const SummaryStats& stats);

struct ChartStyle {
    std::string title;
    std::string xlabel;
    std::string ylabel = "omega";
    bool x_is_offset = false;  // x axis: false = n, true = c
    int filter_m = -1;         // keep rows with this m only (-1 = all)
};

std::string emit_svg(const SummaryStats& stats, const ChartStyle& style);

struct RecoveryRow {
    int size = 0;
    double cutoff = 0.0;
    double bandwidth = 0.0;
    double err_ls = 0.0;
    double err_min = 0.0;
    double acc_ls = 0.0;
    double acc_min = 0.0;
    bool condition_met = false;
};

struct RecoveryReport {
    std::vector<RecoveryRow> rows;
    int final_size = 0;
    bool recovered = false;
};

// Grows a random-order labeled set until the cutoff frequency clears the
// indicator bandwidth, interpolating at every size.
RecoveryReport run_recovery_demo(const ExperimentConfig& config);

std::string recovery_to_csv(const RecoveryReport& report);
std::string recovery_svg(const RecoveryReport& report);

}  // namespace bandlim
