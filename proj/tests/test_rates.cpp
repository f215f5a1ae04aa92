#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "igd/rates.hpp"

using namespace igd;

TEST_CASE("regime boundaries") {
    const RegimeBounds b0 = regime_boundaries(0.0);
    CHECK(b0.h_li == doctest::Approx(1.5));
    CHECK(b0.h_ir == doctest::Approx(1.5));
    CHECK(b0.h_max == doctest::Approx(2.0));

    // delta -> 1: h_max -> 1
    CHECK(regime_boundaries(1.0 - 1e-9).h_max == doctest::Approx(1.0).epsilon(1e-8));

    const RegimeBounds b5 = regime_boundaries(0.5);
    CHECK(b5.h_li == doctest::Approx(1.0));
    CHECK(b5.h_ir == doctest::Approx((3.5 - std::sqrt(3.25)) / 1.5).epsilon(1e-14));
    CHECK(b5.h_max == doctest::Approx(4.0 / 3.0));

    // intermediate band collapses as delta -> 0
    const RegimeBounds btiny = regime_boundaries(1e-12);
    CHECK(btiny.h_li == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(btiny.h_ir == doctest::Approx(1.5).epsilon(1e-10));

    for (double d = 0.01; d < 1.0; d += 0.01) {
        const RegimeBounds b = regime_boundaries(d);
        CHECK(b.h_li > 0.0);
        CHECK(b.h_li <= b.h_ir);
        CHECK(b.h_ir <= b.h_max);
    }
    CHECK_THROWS(regime_boundaries(-0.1));
    CHECK_THROWS(regime_boundaries(1.0));
}

TEST_CASE("regime classification and boundary ties") {
    CHECK(classify_regime(0.5, 0.3) == Regime::Left);
    const RegimeBounds b5 = regime_boundaries(0.5);
    CHECK(classify_regime(b5.h_li, 0.5) == Regime::Intermediate);
    CHECK(classify_regime(b5.h_ir, 0.5) == Regime::Intermediate);
    CHECK(classify_regime(b5.h_max, 0.5) == Regime::Right);

    const RegimeBounds b1 = regime_boundaries(0.1);
    CHECK(classify_regime(1.35, 0.1) == (1.35 < b1.h_li ? Regime::Left : Regime::Intermediate));

    CHECK_THROWS_AS(classify_regime(1.4, 0.5), std::domain_error);  // beyond h_max(0.5)
    CHECK_THROWS_AS(classify_regime(-0.1, 0.5), std::domain_error);
}

TEST_CASE("lambda_tilde boundary values") {
    for (double d : {0.1, 0.3, 0.5, 0.8, 0.95}) {
        const RegimeBounds b = regime_boundaries(d);
        CHECK(lambda_tilde(b.h_li, d) == doctest::Approx(1.0).epsilon(1e-10));
        const double u = b.h_ir * (1.0 + d);
        const double case2 = (2.0 - u) / (u - 1.0);
        CHECK(lambda_tilde(b.h_ir, d) == doctest::Approx(case2).epsilon(1e-9));
    }
    CHECK(lambda_tilde(1.5, 0.0) == doctest::Approx(1.0));
    // the exact-case boundary cubic has lambda = 1 as a double root
    const CubicRoots r = lambda_tilde_roots(1.5, 0.0);
    CHECK(r.largest() == doctest::Approx(1.0));
    CHECK(r.mult[r.count - 1] == 2);
}

TEST_CASE("one-step rate to f1") {
    CHECK(rate_one_step_to_f1(0.75, 0.3) == doctest::Approx(1.0 / 0.525).epsilon(1e-14));
    CHECK(std::isinf(rate_one_step_to_f1(0.0, 0.3)));
    const double hm = regime_boundaries(0.4).h_max;
    CHECK(std::isinf(rate_one_step_to_f1(hm, 0.4)));
    CHECK_THROWS(rate_one_step_to_f1(hm * 1.01, 0.4));
}

TEST_CASE("one-step rate to fstar") {
    CHECK(rate_one_step_to_fstar(1.0, 0.0) == doctest::Approx(2.0 / 3.0));
    for (double d : {0.0, 0.2, 0.7}) {
        CHECK(rate_one_step_to_fstar(0.0, d) == doctest::Approx(2.0));
        const double hm = regime_boundaries(d).h_max;
        CHECK(rate_one_step_to_fstar(hm, d) == doctest::Approx(2.0));
    }
}

TEST_CASE("branch continuity at both regime boundaries") {
    for (double d = 0.05; d < 0.96; d += 0.05) {
        const RegimeBounds b = regime_boundaries(d);
        for (double h : {b.h_li, b.h_ir}) {
            const Regime outer = h == b.h_li ? Regime::Left : Regime::Right;
            const double ci = rate_branch_to_f1(Regime::Intermediate, h, d);
            const double co = rate_branch_to_f1(outer, h, d);
            CHECK(std::abs(ci - co) / co <= 1e-10);
            const double ti = rate_branch_to_fstar(Regime::Intermediate, h, d);
            const double to = rate_branch_to_fstar(outer, h, d);
            CHECK(std::abs(ti - to) / to <= 1e-10);
            for (int n : {1, 5, 20}) {
                const double ni = rate_branch_n_steps(Regime::Intermediate, h, d, n);
                const double no = rate_branch_n_steps(outer, h, d, n);
                CHECK(std::abs(ni - no) / no <= 1e-10);
            }
        }
    }
}

TEST_CASE("exact-case rates") {
    for (int n : {1, 3, 10}) {
        CHECK(rate_exact_n_steps(1.0, n) == doctest::Approx(1.0 / (n + 0.5)));
    }
    CHECK(rate_exact_n_steps(2.0, 1) == doctest::Approx(2.0));
    CHECK(rate_exact_n_steps(0.0, 1) == doctest::Approx(2.0));
    CHECK(rate_exact_one_step(1.0) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS(rate_exact_n_steps(2.1, 1));
}

TEST_CASE("n-step rate") {
    for (double d : {0.1, 0.5, 0.8}) {
        const RegimeBounds b = regime_boundaries(d);
        for (int i = 1; i < 40; ++i) {
            const double h = b.h_max * i / 40.0;
            CHECK(rate_n_steps(h, d, 1) ==
                  doctest::Approx(rate_one_step_to_fstar(h, d)).epsilon(1e-12));
        }
        for (int n : {1, 2, 7, 30}) {
            CHECK(rate_n_steps(b.h_max, d, n) == doctest::Approx(2.0));
        }
    }
    CHECK(rate_n_steps(0.75, 0.3, 20) == doctest::Approx(1.0 / 11.0).epsilon(1e-14));
}

TEST_CASE("n-step rate monotone in n, degradation in delta") {
    for (double d : {0.15, 0.45, 0.85}) {
        const RegimeBounds b = regime_boundaries(d);
        for (int i = 1; i < 25; ++i) {
            const double h = b.h_max * i / 25.0;
            double prev = rate_n_steps(h, d, 1);
            for (int n = 2; n <= 16; n *= 2) {
                const double cur = rate_n_steps(h, d, n);
                CHECK(cur <= prev + 1e-12);
                prev = cur;
            }
        }
    }
    // more inexactness never improves the one-step worst case
    for (double h : {0.3, 0.8, 1.05}) {
        double prev = rate_one_step_to_fstar(h, 0.05);
        for (double d = 0.1; d < 0.95; d += 0.05) {
            if (h > regime_boundaries(d).h_max) break;
            const double cur = rate_one_step_to_fstar(h, d);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("rate to fstar monotone toward the middle band") {
    for (double d : {0.2, 0.6}) {
        const RegimeBounds b = regime_boundaries(d);
        double prev = rate_one_step_to_fstar(0.0, d);
        for (int i = 1; i <= 30; ++i) {
            const double h = b.h_li * i / 30.0;
            const double cur = rate_one_step_to_fstar(h, d);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
        prev = rate_one_step_to_fstar(b.h_ir + 1e-9, d);
        for (int i = 1; i <= 30; ++i) {
            const double h = b.h_ir + (b.h_max - b.h_ir) * i / 30.0;
            const double cur = rate_one_step_to_fstar(h, d);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("reciprocal identity between the two one-step rates") {
    for (double d : {0.1, 0.5, 0.8}) {
        const RegimeBounds b = regime_boundaries(d);
        for (int i = 1; i < 60; ++i) {
            const double h = b.h_max * i / 60.0;
            const double c = rate_one_step_to_f1(h, d);
            const double ct = rate_one_step_to_fstar(h, d);
            const double lhs = 1.0 / ct;
            const double rhs = (std::isinf(c) ? 0.0 : 1.0 / c) + 0.5;
            CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
        }
    }
}

TEST_CASE("dispatchers agree with the branch formula of the classified regime") {
    for (double d : {0.07, 0.33, 0.61, 0.89}) {
        const double hm = regime_boundaries(d).h_max;
        for (int i = 1; i < 90; ++i) {
            const double h = hm * i / 90.0;
            const Regime r = classify_regime(h, d);
            CHECK(rate_one_step_to_f1(h, d) == rate_branch_to_f1(r, h, d));
            CHECK(rate_one_step_to_fstar(h, d) == rate_branch_to_fstar(r, h, d));
            CHECK(rate_n_steps(h, d, 7) == rate_branch_n_steps(r, h, d, 7));
        }
    }
}

TEST_CASE("exact-case consistency as delta -> 0") {
    for (int i = 0; i <= 100; ++i) {
        const double h = 2.0 * i / 100.0;
        const double d = std::min(1e-10, h > 0.0 ? 0.5 * (2.0 / h - 1.0) : 1e-10);
        if (d <= 0.0) continue;
        const double lim = rate_one_step_to_fstar(h, d);
        CHECK(std::abs(lim - rate_exact_one_step(h)) <= 1e-8);
    }
}

TEST_CASE("lower bound vs upper bound") {
    for (double d : {0.1, 0.5, 0.8}) {
        const RegimeBounds b = regime_boundaries(d);
        for (int n : {1, 5, 20}) {
            for (int i = 0; i <= 50; ++i) {
                const double h = b.h_max * i / 50.0;
                const double lb = lower_bound_n(h, d, n);
                const double ub = rate_n_steps(h, d, n);
                CHECK(lb <= ub * (1.0 + 1e-12));
                if (h < b.h_li) CHECK(lb == doctest::Approx(ub).epsilon(1e-14));
            }
        }
    }
    // quadratic branch vanishes at h = 1/(1+delta)
    const double d = 0.4, h = 1.0 / 1.4;
    CHECK(lower_bound_n(h, d, 7) == doctest::Approx(1.0 / (7.0 * h * 0.6 + 0.5)));
    // one step: max of the two tight one-step rates
    for (double dd : {0.2, 0.6}) {
        const RegimeBounds bb = regime_boundaries(dd);
        for (int i = 1; i < 20; ++i) {
            const double hh = bb.h_max * i / 20.0;
            const double om = 1.0 - hh * (1.0 + dd);
            const double expect =
                std::max(1.0 / (hh * (1.0 - dd) + 0.5), 2.0 * om * om);
            CHECK(lower_bound_n(hh, dd, 1) == doctest::Approx(expect).epsilon(1e-14));
        }
    }
    // frozen value: 2 * 0.8^10 for the quadratic branch at (1.2, 0.5, 5)
    const double quad_branch = 2.0 * std::pow(1.0 - 1.2 * 1.5, 10);
    CHECK(quad_branch == doctest::Approx(0.2147483648).epsilon(1e-14));
    CHECK(lower_bound_n(1.2, 0.5, 5) ==
          doctest::Approx(std::max(1.0 / (5.0 * 1.2 * 0.5 + 0.5), quad_branch)));
}

TEST_CASE("maximal stepsize comparison") {
    const HmaxComparison c0 = compare_h_max(0.0);
    CHECK(c0.ours == doctest::Approx(2.0));
    CHECK(c0.prior == doctest::Approx(2.0));
    CHECK(c0.ratio == doctest::Approx(1.0));

    const HmaxComparison c8 = compare_h_max(0.8);
    CHECK(c8.ours == doctest::Approx(2.0 / 1.8).epsilon(1e-14));
    CHECK(c8.prior == doctest::Approx(2.0 / 27.0).epsilon(1e-13));
    CHECK(c8.ratio == doctest::Approx(15.0).epsilon(1e-12));

    const HmaxComparison c5 = compare_h_max(0.5);
    CHECK(c5.ours == doctest::Approx(4.0 / 3.0));
    CHECK(c5.prior == doctest::Approx(2.0 * std::pow(1.0 / 3.0, 1.5)).epsilon(1e-14));

    for (double d = 0.01; d < 1.0; d += 0.01) {
        CHECK(compare_h_max(d).ours > h_max_vasin(d));
    }
}

TEST_CASE("optimal stepsize lands in the middle band") {
    for (double d = 0.1; d < 0.95; d += 0.1) {
        const RegimeBounds b = regime_boundaries(d);
        for (int n : {1, 5, 50}) {
            const StepsizeChoice c = optimal_stepsize(d, n);
            CHECK(c.h_opt >= b.h_li - 1e-9);
            CHECK(c.h_opt <= b.h_ir + 1e-9);
            CHECK(c.rate <= rate_n_steps(b.h_li, d, n) + 1e-12);
            CHECK(c.rate <= rate_n_steps(b.h_ir, d, n) + 1e-12);
        }
        CHECK(approx_optimal_stepsize(d) == doctest::Approx(b.h_ir));
    }
}

TEST_CASE("near-optimality of the band's right endpoint") {
    for (double d = 0.2; d < 0.95; d += 0.1) {
        for (int n : {1, 5, 20, 50}) {
            const StepsizeChoice c = optimal_stepsize(d, n);
            const double at_ir = rate_n_steps(approx_optimal_stepsize(d), d, n);
            CHECK(at_ir / c.rate <= 1.05);
        }
    }
}

TEST_CASE("optimal stepsize grows toward 3/2 as inexactness vanishes") {
    const double h05 = optimal_stepsize(0.05, 1).h_opt;
    const double h10 = optimal_stepsize(0.10, 1).h_opt;
    const double h20 = optimal_stepsize(0.20, 1).h_opt;
    CHECK(h05 > h10);
    CHECK(h10 > h20);
    CHECK(h05 < 1.5);
    // exact case: minimizer of the one-step rate sits at 3/2
    CHECK(optimal_stepsize(0.0, 1).h_opt == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("query validation") {
    RateQuery q{1.0, 0.5, 0.3, 4};
    CHECK_NOTHROW(q.validate());
    q.L = 0.0;
    CHECK_THROWS(q.validate());
    q.L = 1.0;
    q.delta = 1.0;
    CHECK_THROWS(q.validate());
    q.delta = 0.3;
    q.h = 1.6;  // beyond 2/1.3
    CHECK_THROWS(q.validate());
    q.h = 0.5;
    q.n = 0;
    CHECK_THROWS(q.validate());
}
