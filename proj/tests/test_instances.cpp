#include <doctest.h>

#include <cmath>

#include "igd/instances.hpp"
#include "igd/interpolation.hpp"
#include "igd/rates.hpp"
#include "igd/rng.hpp"
#include "igd/simulator.hpp"

using namespace igd;

TEST_CASE("huber construction") {
    // s^2 = 1/1.025 and unit initial gap
    const Instance h1 = make_huber(0.3, 0.75, 1, 1.0);
    CHECK(h1.slope * h1.slope == doctest::Approx(1.0 / 1.025).epsilon(1e-14));
    CHECK(h1.value(h1.x_start) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(h1.threshold == doctest::Approx(h1.slope));

    // f(x0) = s^2 (N h (1-delta) + 1/2) = 1 for any N
    for (double d : {0.12, 0.4, 0.77}) {
        const Instance hn = make_huber(d, 0.6, 20, 1.0);
        CHECK(hn.value(hn.x_start) == doctest::Approx(1.0).epsilon(1e-13));
    }

    // exact-case specialization: s^2 = 2/3
    const Instance h0 = make_huber(0.0, 1.0, 1, 1.0);
    CHECK(h0.slope * h0.slope == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    // scaled smoothness keeps the unit gap and t = s/L
    const Instance h4 = make_huber(0.3, 0.75, 2, 4.0);
    CHECK(h4.value(h4.x_start) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(h4.threshold == doctest::Approx(h4.slope / 4.0));
}

TEST_CASE("quadratic construction") {
    const Instance q1 = make_quadratic(1.0);
    CHECK(q1.x_start.x == doctest::Approx(std::sqrt(2.0)));
    CHECK(q1.value(q1.x_start) == doctest::Approx(1.0));
    CHECK(q1.gradient(q1.x_start).x == doctest::Approx(1.0 * q1.x_start.x));

    const Instance q4 = make_quadratic(4.0);
    CHECK(q4.x_start.x == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(q4.gradient(q4.x_start).x == doctest::Approx(4.0 * q4.x_start.x));
}

TEST_CASE("huber curvature profile") {
    const Instance h = make_huber(0.4, 0.8, 3, 2.0);
    // quadratic inside, linear outside, continuous at the kink
    const double t = h.threshold;
    CHECK(h.value(Vec::make1(0.5 * t)) == doctest::Approx(0.5 * 2.0 * 0.25 * t * t));
    CHECK(h.gradient(Vec::make1(2.0 * t)).x == doctest::Approx(h.slope));
    const double inner = h.value(Vec::make1(t * (1.0 - 1e-9)));
    const double outer = h.value(Vec::make1(t * (1.0 + 1e-9)));
    CHECK(inner == doctest::Approx(outer).epsilon(1e-7));
}

TEST_CASE("generated instances interpolate as smooth convex data") {
    for (double d : {0.1, 0.5, 0.8}) {
        for (int n : {1, 5}) {
            const double h = 0.8 * regime_boundaries(d).h_li;
            const Instance inst = make_huber(d, h, n, 1.0);
            const Trace tr = run(inst, oracle_scaled(1.0 - d, d), h, d, 1);
            std::vector<PepPoint> pts = {
                {inst.x_start, inst.gradient(inst.x_start), inst.value(inst.x_start)},
                {tr.steps[1].x, tr.steps[1].g, tr.steps[1].f},
                {Vec::make1(0.0), Vec::make1(0.0), 0.0}};
            CHECK(interpolation_check(pts, inst.L).min_slack >= -1e-12);

            const Instance quad = make_quadratic(1.0);
            const Trace tq = run(quad, oracle_scaled(1.0 + d, d), h, d, 1);
            std::vector<PepPoint> qts = {
                {quad.x_start, quad.gradient(quad.x_start), quad.value(quad.x_start)},
                {tq.steps[1].x, tq.steps[1].g, tq.steps[1].f},
                {Vec::make1(0.0), Vec::make1(0.0), 0.0}};
            CHECK(interpolation_check(qts, quad.L).min_slack >= -1e-12);
        }
    }
}

TEST_CASE("random admissible runs interpolate together with the minimizer") {
    Rng rng(404);
    for (int t = 0; t < 120; ++t) {
        const double d = rng.uniform(0.05, 0.9);
        const double h = rng.uniform(0.05, 0.95) * regime_boundaries(d).h_max;
        const int dim = t % 3 == 0 ? 2 : 1;
        const Instance inst = t % 2 == 0 ? make_huber(d, h, 3, 1.0, dim)
                                         : make_quadratic(1.0, dim);
        const Trace tr = run(inst, random_ball_oracle(d, rng.next_u64()), h, d, 3);
        std::vector<PepPoint> pts;
        for (const auto& st : tr.steps) pts.push_back({st.x, st.g, st.f});
        const Vec origin = dim == 1 ? Vec::make1(0.0) : Vec::make2(0.0, 0.0);
        pts.push_back({origin, origin, 0.0});
        CHECK(interpolation_check(pts, inst.L, 1e-10).ok);
    }
}

TEST_CASE("scaled oracle") {
    const Oracle o = oracle_scaled(0.7, 0.3);
    const Vec g = Vec::make1(2.0);
    CHECK(o.direction(Vec::make1(1.0), g).x == doctest::Approx(1.4));
    CHECK_THROWS(oracle_scaled(0.6, 0.3));
    CHECK_NOTHROW(oracle_scaled(1.3, 0.3));
    CHECK(oracle_scaled(1.0, 0.0).direction(Vec::make1(0.0), g).x == doctest::Approx(2.0));
}

TEST_CASE("orthogonal oracle saturates the error ball") {
    // displayed construction: g = (1, 0), delta = 0.5 -> d = (0.75, sqrt(3)/4)
    const Oracle o = oracle_orthogonal(0.5, +1);
    const Vec d = o.direction(Vec::make2(0.0, 0.0), Vec::make2(1.0, 0.0));
    CHECK(d.x == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(d.y == doctest::Approx(0.25 * std::sqrt(3.0)).epsilon(1e-15));

    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const double delta = rng.uniform(0.05, 0.95);
        const int orient = rng.uniform01() < 0.5 ? +1 : -1;
        const Oracle oo = oracle_orthogonal(delta, orient);
        const Vec g = Vec::make2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        if (g.norm() < 1e-6) continue;
        const Vec dd = oo.direction(Vec::make2(0.0, 0.0), g);
        const Vec err = dd - g;
        // the error saturates the ball and is orthogonal to the direction
        CHECK(err.norm() == doctest::Approx(delta * g.norm()).epsilon(1e-13));
        CHECK(dot(err, dd) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(dd.norm() ==
              doctest::Approx(std::sqrt(1.0 - delta * delta) * g.norm()).epsilon(1e-13));
        // alignment of the error with the gradient is -delta by construction
        CHECK(dot(err, g) / (err.norm() * g.norm()) == doctest::Approx(-delta).epsilon(1e-12));
    }

    // rotation is undefined in one dimension
    CHECK_THROWS(o.direction(Vec::make1(0.0), Vec::make1(1.0)));
}

TEST_CASE("every oracle stays inside the inexactness ball") {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const double delta = rng.uniform(0.0, 0.95);
        const Vec g = Vec::make2(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
        const double f = rng.uniform(1.0 - delta, 1.0 + delta);
        const Vec ds = oracle_scaled(f, delta).direction(Vec::make2(0, 0), g);
        CHECK((ds - g).norm() <= delta * g.norm() * (1.0 + 1e-12));
        if (delta > 0.0) {
            const Vec dn = oracle_orthogonal(delta).direction(Vec::make2(0, 0), g);
            CHECK((dn - g).norm() <= delta * g.norm() * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("scaled oracle is an exact step at the effective stepsize") {
    for (double d : {0.2, 0.6}) {
        for (double c : {1.0 - d, 1.0 + d, 1.0}) {
            const double h = 0.7;
            const Instance inst = make_quadratic(1.0);
            const Trace ts = run(inst, oracle_scaled(c, d), h, d, 1);
            const Trace te = run(inst, oracle_exact(), h * c, 0.0, 1);
            CHECK(ts.steps[1].x.x == doctest::Approx(te.steps[1].x.x).epsilon(1e-15));

            const Instance hub = make_huber(d, h, 1, 1.0);
            const Trace hs = run(hub, oracle_scaled(c, d), h, d, 1);
            const Trace he = run(hub, oracle_exact(), h * c, 0.0, 1);
            CHECK(hs.steps[1].x.x == doctest::Approx(he.steps[1].x.x).epsilon(1e-15));
        }
    }
}

TEST_CASE("instance descriptor") {
    const Instance q = make_quadratic(2.0);
    const std::string s = q.descriptor_json();
    CHECK(s.find("\"kind\":\"quadratic\"") != std::string::npos);
    CHECK(s.find("\"dimension\":1") != std::string::npos);
    const Instance h2 = make_huber(0.5, 1.0, 1, 1.0, 2);
    CHECK(h2.descriptor_json().find("\"dimension\":2") != std::string::npos);
}
