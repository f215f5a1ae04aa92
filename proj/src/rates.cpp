#include "igd/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace igd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_delta(double delta) {
    if (!(delta >= 0.0 && delta < 1.0)) {
        throw std::invalid_argument("delta must lie in [0, 1)");
    }
}

void check_h_range(double h, double h_max) {
    if (!(h >= 0.0 && h <= h_max * (1.0 + 1e-12))) {
        throw std::domain_error("stepsize h = " + std::to_string(h) +
                                " is in the divergence region (h_max = " + std::to_string(h_max) + ")");
    }
}

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("iteration count must be >= 1");
}

}  // namespace

void RateQuery::validate() const {
    if (!(L > 0.0)) throw std::invalid_argument("smoothness constant L must be positive");
    check_delta(delta);
    check_n(n);
    check_h_range(h, 2.0 / (1.0 + delta));
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Left: return "left";
        case Regime::Intermediate: return "intermediate";
        case Regime::Right: return "right";
    }
    return "?";
}

RegimeBounds regime_boundaries(double delta) {
    check_delta(delta);
    RegimeBounds b;
    b.h_li = 3.0 / (2.0 * (1.0 + delta));
    b.h_max = 2.0 / (1.0 + delta);
    // rationalized form of (3d + 2 - sqrt(4 - 3d^2)) / (2d(d+1)); the printed
    // quotient cancels catastrophically as d -> 0, this one is exact there
    b.h_ir = 6.0 / (3.0 * delta + 2.0 + std::sqrt(4.0 - 3.0 * delta * delta));
    return b;
}

Regime classify_regime(double h, double delta) {
    const RegimeBounds b = regime_boundaries(delta);
    check_h_range(h, b.h_max);
    if (h < b.h_li) return Regime::Left;
    if (h <= b.h_ir) return Regime::Intermediate;
    return Regime::Right;
}

CubicCoeffs lambda_cubic(double h, double delta) {
    check_delta(delta);
    const double d2m1 = delta * delta - 1.0;
    CubicCoeffs p;
    p.c3 = d2m1 * h * h + 2.0 * h;
    p.c2 = 2.0 * d2m1 * h * h + 5.0 * h - 4.0;
    p.c1 = d2m1 * h * h + 4.0 * h - 4.0;
    p.c0 = h - 1.0;
    return p;
}

CubicRoots lambda_tilde_roots(double h, double delta) {
    const CubicCoeffs p = lambda_cubic(h, delta);
    CubicRoots roots = solve_cubic(p);
    if (roots.count == 0) {
        throw std::runtime_error("lambda_tilde: no real root found (internal inconsistency)");
    }
    return roots;
}

double lambda_tilde(double h, double delta) {
    return lambda_tilde_roots(h, delta).largest();
}

double rate_exact_one_step(double h) {
    check_h_range(h, 2.0);
    const double a = 1.0 / (h + 0.5);
    const double b = 2.0 * (1.0 - h) * (1.0 - h);
    return std::max(a, b);
}

double rate_exact_one_step_to_f1(double h) {
    check_h_range(h, 2.0);
    if (h == 0.0) return kInf;
    const double a = 1.0 / h;
    const double om = 1.0 - h;
    if (om == 0.0) return a;  // quadratic branch vanishes at h = 1
    const double den = 1.0 / (om * om) - 1.0;
    if (den <= 0.0) return kInf;  // h = 2: no finite f0 - f1 guarantee
    return std::max(a, 2.0 / den);
}

double rate_exact_n_steps(double h, int n) {
    check_h_range(h, 2.0);
    check_n(n);
    const double a = 1.0 / (n * h + 0.5);
    const double b = 2.0 * std::pow((1.0 - h) * (1.0 - h), n);
    return std::max(a, b);
}

double rate_branch_to_f1(Regime r, double h, double delta) {
    switch (r) {
        case Regime::Left: {
            if (h == 0.0) return kInf;
            return 1.0 / (h * (1.0 - delta));
        }
        case Regime::Intermediate: {
            const double lam = lambda_tilde(h, delta);
            return 2.0 * lam / (h * lam * lam + 2.0 * (h - 1.0) * lam + h - 1.0);
        }
        case Regime::Right: {
            const double om = 1.0 - h * (1.0 + delta);
            const double den = 1.0 / (om * om) - 1.0;
            if (den <= 0.0) return kInf;  // h = h_max
            return 2.0 / den;
        }
    }
    return kInf;
}

double rate_branch_to_fstar(Regime r, double h, double delta) {
    switch (r) {
        case Regime::Left:
            return 1.0 / (h * (1.0 - delta) + 0.5);
        case Regime::Intermediate: {
            const double lam = lambda_tilde(h, delta);
            return 2.0 * lam / (h * lam * lam + (2.0 * h - 1.0) * lam + h - 1.0);
        }
        case Regime::Right: {
            const double om = 1.0 - h * (1.0 + delta);
            return 2.0 * om * om;
        }
    }
    return kInf;
}

double rate_branch_n_steps(Regime r, double h, double delta, int n) {
    switch (r) {
        case Regime::Left:
            return 1.0 / (n * h * (1.0 - delta) + 0.5);
        case Regime::Intermediate: {
            const double lam = lambda_tilde(h, delta);
            return 2.0 * lam / (n * (h * lam * lam + 2.0 * (h - 1.0) * lam + h - 1.0) + lam);
        }
        case Regime::Right: {
            const double om = 1.0 - h * (1.0 + delta);
            return 2.0 / (n / (om * om) - (n - 1.0));
        }
    }
    return kInf;
}

double rate_one_step_to_f1(double h, double delta) {
    check_delta(delta);
    if (delta == 0.0) return rate_exact_one_step_to_f1(h);
    const RegimeBounds b = regime_boundaries(delta);
    check_h_range(h, b.h_max);
    return rate_branch_to_f1(classify_regime(h, delta), h, delta);
}

double rate_one_step_to_fstar(double h, double delta) {
    check_delta(delta);
    if (delta == 0.0) return rate_exact_one_step(h);
    const RegimeBounds b = regime_boundaries(delta);
    check_h_range(h, b.h_max);
    return rate_branch_to_fstar(classify_regime(h, delta), h, delta);
}

double rate_n_steps(double h, double delta, int n) {
    check_delta(delta);
    check_n(n);
    if (delta == 0.0) return rate_exact_n_steps(h, n);
    const RegimeBounds b = regime_boundaries(delta);
    check_h_range(h, b.h_max);
    return rate_branch_n_steps(classify_regime(h, delta), h, delta, n);
}

double lower_bound_n(double h, double delta, int n) {
    check_delta(delta);
    check_n(n);
    const RegimeBounds b = regime_boundaries(delta);
    check_h_range(h, b.h_max);
    const double huber = 1.0 / (n * h * (1.0 - delta) + 0.5);
    const double om = 1.0 - h * (1.0 + delta);
    const double quad = 2.0 * std::pow(om * om, n);
    return std::max(huber, quad);
}

double h_max_vasin(double delta) {
    check_delta(delta);
    return 2.0 * std::pow((1.0 - delta) / (1.0 + delta), 1.5);
}

HmaxComparison compare_h_max(double delta) {
    HmaxComparison c;
    c.ours = 2.0 / (1.0 + delta);
    c.prior = h_max_vasin(delta);
    c.ratio = c.ours / c.prior;
    return c;
}

namespace {

// Golden-section minimization on [lo, hi]; assumes local unimodality around
// the coarse-scan winner.
template <class F>
double golden_min(F&& f, double lo, double hi, double tol) {
    constexpr double kGold = 0.6180339887498948482;
    double a = lo, b = hi;
    double c1 = b - kGold * (b - a);
    double c2 = a + kGold * (b - a);
    double f1 = f(c1), f2 = f(c2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - kGold * (b - a);
            f1 = f(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + kGold * (b - a);
            f2 = f(c2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

StepsizeChoice optimal_stepsize(double delta, int n) {
    check_delta(delta);
    check_n(n);
    if (delta == 0.0) {
        // Exact case: the f* rate's two branches cross at the minimizer.
        auto f = [n](double h) { return rate_exact_n_steps(h, n); };
        double best_h = golden_min(f, 1.0, 2.0, 1e-10);
        return {best_h, f(best_h)};
    }
    const RegimeBounds b = regime_boundaries(delta);
    auto f = [delta, n](double h) { return rate_n_steps(h, delta, n); };

    // Coarse scan per regime at 1e-4 resolution, boundary points included.
    double best_h = b.h_li;
    double best_v = f(best_h);
    auto consider = [&](double h) {
        if (h < 0.0 || h > b.h_max) return;
        const double v = f(h);
        if (v < best_v) {
            best_v = v;
            best_h = h;
        }
    };
    const double step = 1e-4;
    for (double h = step; h < b.h_max; h += step) consider(h);
    consider(b.h_ir);
    consider(b.h_max);

    // Refine inside a one-step bracket around the scan winner.
    const double lo = std::max(0.0, best_h - step);
    const double hi = std::min(b.h_max, best_h + step);
    const double h_opt = golden_min(f, lo, hi, 1e-10);
    const double v_opt = f(h_opt);
    if (v_opt <= best_v) return {h_opt, v_opt};
    return {best_h, best_v};
}

double approx_optimal_stepsize(double delta) {
    return regime_boundaries(delta).h_ir;
}

}  // namespace igd
