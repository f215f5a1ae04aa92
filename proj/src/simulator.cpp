#include "igd/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

#include "igd/rng.hpp"

namespace igd {

Trace run(const Instance& inst, const DirectionFn& oracle, double h, double delta, int n) {
    if (!(h >= 0.0)) throw std::invalid_argument("run: h must be nonnegative");
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in [0, 1)");
    if (n < 1) throw std::invalid_argument("run: n must be >= 1");

    Trace tr;
    tr.h = h;
    tr.delta = delta;
    tr.L = inst.L;
    tr.f_star = inst.f_star();
    tr.n = n;
    tr.steps.reserve(static_cast<std::size_t>(n) + 1);

    Vec x = inst.x_start;
    for (int k = 0; k < n; ++k) {
        TraceStep st;
        st.x = x;
        st.g = inst.gradient(x);
        st.f = inst.value(x);
        st.d = oracle(x, st.g);
        st.has_d = true;
        if ((st.d - st.g).norm() > delta * st.g.norm() * (1.0 + 1e-12)) {
            throw std::runtime_error("oracle violated the inexactness bound at iteration " +
                                     std::to_string(k));
        }
        tr.steps.push_back(st);
        x = x - (h / inst.L) * st.d;
    }
    TraceStep last;
    last.x = x;
    last.g = inst.gradient(x);
    last.f = inst.value(x);
    last.has_d = false;
    tr.steps.push_back(last);
    return tr;
}

Trace run(const Instance& inst, const Oracle& oracle, double h, double delta, int n) {
    return run(
        inst, [&oracle](const Vec& x, const Vec& g) { return oracle.direction(x, g); }, h,
        delta, n);
}

Metrics metrics(const Trace& trace) {
    if (trace.steps.size() < 2) throw std::invalid_argument("metrics: incomplete trace");
    Metrics m;
    const double gap = trace.steps.front().f - trace.f_star;
    const double gap1 = trace.steps.front().f - trace.steps[1].f;
    if (gap <= 0.0) {
        m.degenerate = true;
        return m;
    }
    const double inv_l = 1.0 / trace.L;
    m.ratio_last = inv_l * trace.steps.back().g.norm2() / gap;
    double min_g2 = trace.steps[1].g.norm2();
    for (std::size_t k = 2; k < trace.steps.size(); ++k) {
        min_g2 = std::min(min_g2, trace.steps[k].g.norm2());
    }
    m.ratio_min = inv_l * min_g2 / gap;
    m.ratio_to_f1 = gap1 > 0.0 ? inv_l * trace.steps[1].g.norm2() / gap1
                               : std::numeric_limits<double>::infinity();
    return m;
}

DivergenceReport divergence_probe(double delta, double h, int n) {
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in [0, 1)");
    const double h_max = 2.0 / (1.0 + delta);
    if (h < h_max * (1.0 - 1e-12)) {
        throw std::domain_error("divergence_probe: h must be at or beyond h_max");
    }
    const Instance quad = make_quadratic(1.0, 1);
    const Trace tr = run(quad, oracle_scaled(1.0 + delta, delta), h, delta, n);

    DivergenceReport rep;
    rep.factor = std::abs(1.0 - h * (1.0 + delta));
    rep.g_norms.reserve(tr.steps.size());
    for (const auto& st : tr.steps) rep.g_norms.push_back(st.g.norm());
    rep.strictly_increasing = true;
    rep.max_factor_deviation = 0.0;
    for (std::size_t k = 0; k + 1 < rep.g_norms.size(); ++k) {
        if (!(rep.g_norms[k + 1] > rep.g_norms[k])) rep.strictly_increasing = false;
        if (rep.g_norms[k] > 0.0) {
            const double observed = rep.g_norms[k + 1] / rep.g_norms[k];
            rep.max_factor_deviation = std::max(
                rep.max_factor_deviation, std::abs(observed - rep.factor) / rep.factor);
        }
    }
    if (rep.factor <= 1.0) rep.strictly_increasing = false;  // stagnation at the boundary
    return rep;
}

void write_trace_csv(const Trace& trace, std::ostream& os) {
    os << "k,x,g_norm,d_norm,f,err_ratio\n";
    os.precision(17);
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const TraceStep& st = trace.steps[k];
        os << k << ",";
        os << st.x.x;
        if (st.x.dim == 2) os << ";" << st.x.y;
        os << "," << st.g.norm() << ",";
        if (st.has_d) os << st.d.norm();
        os << "," << st.f << ",";
        if (st.has_d) {
            const double gn = st.g.norm();
            os << (gn > 0.0 ? (st.d - st.g).norm() / gn : 0.0);
        }
        os << "\n";
    }
}

DirectionFn random_ball_oracle(double delta, std::uint64_t seed) {
    auto rng = std::make_shared<Rng>(seed);
    return [delta, rng](const Vec& x, const Vec& g) {
        (void)x;
        const double radius = rng->uniform01() * delta * g.norm();
        const Vec dir = rng->unit_vec(g.dim);
        return g + radius * dir;
    };
}

}  // namespace igd
