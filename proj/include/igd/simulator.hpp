#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "igd/instances.hpp"
#include "igd/vec.hpp"

namespace igd {

// One record of a run: iterate, true gradient, oracle direction (absent for
// the final iterate), function value.
struct TraceStep {
    Vec x;
    Vec g;
    Vec d;
    double f = 0.0;
    bool has_d = false;
};

struct Trace {
    std::vector<TraceStep> steps;  // k = 0 .. n
    double h = 0.0;
    double delta = 0.0;
    double L = 1.0;
    double f_star = 0.0;
    int n = 0;
};

using DirectionFn = std::function<Vec(const Vec& x, const Vec& grad)>;

// Runs x_{k+1} = x_k - (h/L) d_k for n steps from the instance's start
// point. h beyond h_max is allowed (divergence studies). Every d_k is
// checked against |d_k - g_k| <= delta |g_k|; a violation aborts with the
// offending iteration index in the message.
Trace run(const Instance& inst, const DirectionFn& oracle, double h, double delta, int n);
Trace run(const Instance& inst, const Oracle& oracle, double h, double delta, int n);

struct Metrics {
    double ratio_last = 0.0;   // |g_n|^2 / (L (f_0 - f*))
    double ratio_min = 0.0;    // min_{1<=k<=n} |g_k|^2 / (L (f_0 - f*))
    double ratio_to_f1 = 0.0;  // |g_1|^2 / (L (f_0 - f_1)), one-step criterion
    bool degenerate = false;   // f_0 = f*: already optimal, ratios reported as 0
};

Metrics metrics(const Trace& trace);

// Quadratic instance driven by the (1+delta)-scaled oracle at a stepsize at
// or beyond h_max: gradient norms grow geometrically with per-step factor
// |1 - h(1+delta)|.
struct DivergenceReport {
    double factor = 0.0;  // expected per-step growth factor
    std::vector<double> g_norms;
    double max_factor_deviation = 0.0;  // worst relative gap of observed factors
    bool strictly_increasing = false;
};

DivergenceReport divergence_probe(double delta, double h, int n);

// Columns: k, x (semicolon-joined components), g_norm, d_norm, f, err_ratio.
// The final iterate has no direction; its d columns stay empty.
void write_trace_csv(const Trace& trace, std::ostream& os);

// Admissible fuzzing oracle: error direction uniform on the sphere, radius
// uniform in [0, delta |g|]. Deterministic for a fixed seed.
DirectionFn random_ball_oracle(double delta, std::uint64_t seed);

}  // namespace igd
