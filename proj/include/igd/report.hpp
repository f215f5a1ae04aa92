#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace igd {

// Shared grid/output description for the table-producing commands.
struct SweepConfig {
    std::vector<double> deltas;
    double h_min = 0.0;
    double h_max_abs = -1.0;  // >= 0: absolute upper bound (clamped to h_max(delta))
    double h_max_frac = 1.0;  // otherwise: fraction of h_max(delta)
    int h_points = 500;
    std::vector<int> n_list{1};
    std::string format = "csv";  // csv | json
    std::uint64_t seed = 0;
    int budget = 1000;

    void validate() const;
};

// One row per (delta, h): regime, C, C~, lambda~ (blank outside the
// intermediate band), then C~_N and the N-step lower bound per requested N.
std::string rates_table(const SweepConfig& cfg);

struct CertifyOutcome {
    int total = 0;
    int failed = 0;
    std::string report;  // csv or json per cfg.format
};

// Inexact certificates on a grid_points-per-delta grid over (0, h_max) plus
// exact-case 2x2 certificates on exact_points over (0, 2).
CertifyOutcome certify_report(const std::vector<double>& deltas, int grid_points,
                              int exact_points, const std::string& format);

// One row per (delta, n): h_opt, rate at h_opt, h_ir, rate at h_ir, ratio.
std::string hopt_table(const std::vector<double>& deltas, const std::vector<int>& n_list,
                       const std::string& format);

struct HmaxOutcome {
    bool dominates = true;  // ours >= prior on the whole grid
    std::string report;
};

HmaxOutcome hmax_table(double d_min, double d_max, double d_step, const std::string& format);

// Writes via a temp file and rename, so readers never observe partial files.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace igd
