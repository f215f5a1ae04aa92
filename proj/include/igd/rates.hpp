#pragma once

#include "igd/cubic.hpp"

namespace igd {

// Parameter tuple for every rate and certificate computation. L is the
// smoothness constant, h the normalized stepsize (the actual step is h/L),
// delta the relative inexactness level, n the iteration count.
struct RateQuery {
    double L = 1.0;
    double h = 0.0;
    double delta = 0.0;
    int n = 1;

    void validate() const;
};

enum class Regime { Left, Intermediate, Right };

const char* to_string(Regime r);

// Stepsize intervals with distinct worst-case formulas, for a fixed delta:
//   Left         [0, h_li)
//   Intermediate [h_li, h_ir]
//   Right        (h_ir, h_max]
struct RegimeBounds {
    double h_li = 0.0;
    double h_ir = 0.0;
    double h_max = 0.0;
};

// h_li = 3/(2(1+delta)), h_ir = (3*delta+2-sqrt(4-3*delta^2))/(2*delta*(delta+1))
// (continuously extended to 3/2 at delta = 0), h_max = 2/(1+delta).
RegimeBounds regime_boundaries(double delta);

// Requires h in [0, h_max(delta)]; out-of-range stepsizes are in the
// divergence region and rejected. Both interval endpoints of the middle
// band classify as Intermediate.
Regime classify_regime(double h, double delta);

// Coefficients of the multiplier cubic, highest degree first:
//   ((d^2-1)h^2+2h, 2(d^2-1)h^2+5h-4, (d^2-1)h^2+4h-4, h-1).
// The leading coefficient is positive for every h in (0, h_max].
CubicCoeffs lambda_cubic(double h, double delta);

// Largest real root of lambda_cubic(h, delta). Meaningful as the
// intermediate-regime multiplier for h in [h_li, h_ir]; equals 1 at h_li.
double lambda_tilde(double h, double delta);

// Same, with all real roots and multiplicities for diagnostics.
CubicRoots lambda_tilde_roots(double h, double delta);

// Exact-gradient rates (delta = 0), h in [0, 2].
double rate_exact_one_step(double h);        // vs f(x0) - f(x*)
double rate_exact_one_step_to_f1(double h);  // vs f(x0) - f(x1)
double rate_exact_n_steps(double h, int n);  // vs f(x0) - f(x*)

// One-step worst-case factor C(h, delta) for the f(x0)-f(x1) criterion.
// Returns +infinity ("no guarantee") at h = 0 and h = h_max, where the
// criterion admits no finite bound. delta = 0 routes to the exact formula.
double rate_one_step_to_f1(double h, double delta);

// One-step worst-case factor C~(h, delta) for the f(x0)-f(x*) criterion.
// Satisfies 1/C~ = 1/C + 1/2; equals 2 at h = 0 and h = h_max.
double rate_one_step_to_fstar(double h, double delta);

// N-step upper bound C~_N(h, delta) on min_{k<=N} |grad f(x_k)|^2 / L
// relative to f(x0) - f(x*). Reduces to rate_one_step_to_fstar at n = 1;
// non-increasing in n. delta = 0 routes to rate_exact_n_steps.
double rate_n_steps(double h, double delta, int n);

// N-step lower bound max{ 1/(n h (1-delta) + 1/2), 2 (1-h(1+delta))^(2n) },
// attained by explicit Huber / quadratic runs. Never exceeds rate_n_steps,
// with equality on the whole Left regime.
double lower_bound_n(double h, double delta, int n);

// Evaluates the given regime's branch formula at (h, delta) regardless of
// where h actually falls; used for continuity checks at the boundaries.
double rate_branch_to_f1(Regime r, double h, double delta);
double rate_branch_to_fstar(Regime r, double h, double delta);
double rate_branch_n_steps(Regime r, double h, double delta, int n);

// Largest stepsize with a convergence guarantee in prior work,
// 2((1-delta)/(1+delta))^{3/2}, against ours = 2/(1+delta).
double h_max_vasin(double delta);

struct HmaxComparison {
    double ours = 0.0;
    double prior = 0.0;
    double ratio = 0.0;  // ours / prior
};

HmaxComparison compare_h_max(double delta);

struct StepsizeChoice {
    double h_opt = 0.0;
    double rate = 0.0;  // rate_n_steps at h_opt
};

// Minimizes rate_n_steps(., delta, n) over [0, h_max]: coarse scan at 1e-4
// resolution across each regime, then golden-section refinement. The
// minimizer always lands in [h_li, h_ir] (the outer branches are monotone
// toward the middle band).
StepsizeChoice optimal_stepsize(double delta, int n);

// N-independent practical choice: the right endpoint h_ir of the
// intermediate band.
double approx_optimal_stepsize(double delta);

}  // namespace igd
