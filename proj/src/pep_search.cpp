#include "igd/pep_search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "igd/fmt.hpp"
#include "igd/rates.hpp"
#include "igd/rng.hpp"

namespace igd {

const char* to_string(PepCriterion c) {
    return c == PepCriterion::ToF1 ? "to_f1" : "to_fstar";
}

namespace {

constexpr int kDim = 8;  // a, d0x, d0y, g1x, g1y, f1, xsx, xsy
constexpr double kSqrt2 = 1.4142135623730950488;

struct State {
    double y[kDim];
};

struct Eval {
    double penalized = -1e300;
    double objective = 0.0;
    double violation = 0.0;
    State repaired{};
};

// Repairs the raw state (error shrunk into the delta-ball, f1 clamped into
// its interpolation window, x* pushed into its half-planes) and scores it.
// Any residual infeasibility enters as a penalty.
Eval evaluate(const State& in, double h, double delta, PepCriterion crit, int dim) {
    Eval out;
    State s = in;
    if (dim == 1) s.y[2] = s.y[4] = s.y[7] = 0.0;

    const double a_cap = crit == PepCriterion::ToFstar ? kSqrt2 : 50.0;
    double a = std::clamp(s.y[0], 1e-6, a_cap);
    double d0x = s.y[1], d0y = s.y[2];
    {
        const double ex = d0x - a, ey = d0y;
        const double en = std::sqrt(ex * ex + ey * ey);
        if (en > delta * a) {
            const double sc = delta * a / en;
            d0x = a + ex * sc;
            d0y = ey * sc;
        }
    }
    const double u = s.y[3], v = s.y[4];
    const double x1x = -h * d0x, x1y = -h * d0y;
    const double n01 = (a - u) * (a - u) + v * v;
    const double g1sq = u * u + v * v;

    double viol = 0.0;
    double f1 = s.y[5];
    double xsx = s.y[6], xsy = s.y[7];

    if (crit == PepCriterion::ToFstar) {
        const double lo = std::max(1.0 - h * a * d0x + 0.5 * n01, 0.5 * g1sq);
        const double hi = 1.0 - h * (u * d0x + v * d0y) - 0.5 * n01;
        if (lo <= hi) {
            f1 = std::clamp(f1, lo, hi);
        } else {
            viol += lo - hi;
            f1 = 0.5 * (lo + hi);
        }
        const double xsx_cap = -(1.0 + 0.5 * a * a) / a;
        xsx = std::min(xsx, xsx_cap);
        const double rhs = -f1 - 0.5 * g1sq + u * x1x + v * x1y;
        if (std::abs(v) > 1e-12) {
            const double bound = (rhs - u * xsx) / v;
            xsy = v > 0.0 ? std::min(xsy, bound) : std::max(xsy, bound);
        } else {
            xsy = dim == 1 ? 0.0 : xsy;
            if (u > 1e-12) {
                xsx = std::min(xsx, rhs / u);
            } else if (u < -1e-12) {
                const double need = rhs / u;  // lower bound on xsx
                if (need <= xsx_cap) {
                    xsx = std::clamp(std::max(xsx, need), need, xsx_cap);
                } else {
                    viol += need - xsx_cap;
                }
            } else if (rhs < 0.0) {
                viol += -rhs;
            }
        }
    } else {
        f1 = 0.0;
        xsx = xsy = 0.0;
        const double q01 = 1.0 - h * (u * d0x + v * d0y) - 0.5 * n01;
        const double q10 = -1.0 + h * a * d0x - 0.5 * n01;
        if (q01 < 0.0) viol += -q01;
        if (q10 < 0.0) viol += -q10;
    }

    out.objective = g1sq;
    out.violation = viol;
    out.penalized = g1sq - 1e4 * viol * viol - 10.0 * viol;
    out.repaired = State{{a, d0x, d0y, u, v, f1, xsx, xsy}};
    return out;
}

PepCandidate assemble(const State& s, double h, double delta, PepCriterion crit, int dim) {
    PepCandidate c;
    c.criterion = crit;
    c.h = h;
    c.delta = delta;
    const auto vec = [dim](double x, double y) {
        return dim == 1 ? Vec::make1(x) : Vec::make2(x, y);
    };
    c.p0 = {vec(0.0, 0.0), vec(s.y[0], 0.0), 1.0};
    c.d0 = vec(s.y[1], s.y[2]);
    c.p1 = {vec(-h * s.y[1], -h * s.y[2]), vec(s.y[3], s.y[4]),
            crit == PepCriterion::ToFstar ? s.y[5] : 0.0};
    c.pstar = {vec(s.y[6], s.y[7]), vec(0.0, 0.0), 0.0};
    c.objective = c.p1.g.norm2();
    return c;
}

State from_candidate(const PepCandidate& c) {
    return State{{c.p0.g.x, c.d0.x, c.d0.y, c.p1.g.x, c.p1.g.y, c.p1.f, c.pstar.x.x,
                  c.pstar.x.y}};
}

std::vector<State> analytic_seeds(double h, double delta, PepCriterion crit, int dim) {
    std::vector<State> seeds;
    const double u = h * (1.0 + delta);
    if (crit == PepCriterion::ToFstar) {
        // Huber configuration driven by the (1-delta)-scaled direction.
        const double s2 = 1.0 / (h * (1.0 - delta) + 0.5);
        const double s = std::sqrt(s2);
        seeds.push_back(
            {{s, (1.0 - delta) * s, 0.0, s, 0.0, 0.5 * s2, -(h * (1.0 - delta) + 1.0) * s, 0.0}});
        // Quadratic configuration driven by the (1+delta)-scaled direction.
        const double g1 = kSqrt2 * (1.0 - u);
        seeds.push_back({{kSqrt2, (1.0 + delta) * kSqrt2, 0.0, g1, 0.0, 0.5 * g1 * g1, -kSqrt2,
                          0.0}});
    } else {
        const double s2 = 1.0 / (h * (1.0 - delta) + 0.5);
        const double gap = 1.0 - 0.5 * s2;
        const double a1 = std::sqrt(s2 / gap);
        seeds.push_back({{a1, (1.0 - delta) * a1, 0.0, a1, 0.0, 0.0, 0.0, 0.0}});
        const double denom = u * (2.0 - u);
        if (denom > 1e-12) {
            const double a2 = std::sqrt(2.0 / denom);
            seeds.push_back({{a2, (1.0 + delta) * a2, 0.0, a2 * (1.0 - u), 0.0, 0.0, 0.0, 0.0}});
        }
    }
    if (dim == 2) {
        // The two saturating bivariate directions: error tangent to the ball
        // (orthogonal to d0) and error orthogonal to the gradient.
        const double a = 1.0;
        const double c = std::sqrt(1.0 - delta * delta);
        seeds.push_back({{a, (1.0 - delta * delta) * a, delta * c * a, 0.5, 0.5, 0.5,
                          -(1.0 + 0.5 * a * a) / a, 0.0}});
        seeds.push_back({{a, a, delta * a, 0.5, 0.5, 0.5, -(1.0 + 0.5 * a * a) / a, 0.0}});
    }
    return seeds;
}

}  // namespace

std::vector<NamedSlack> candidate_slacks(const PepCandidate& c) {
    std::vector<NamedSlack> out;
    const double L = 1.0;
    const Vec g0 = c.p0.g;
    out.push_back({"inexactness", c.delta * c.delta * g0.norm2() - (c.d0 - g0).norm2()});
    const Vec step_target = c.p0.x - c.h * c.d0;
    out.push_back({"step_consistency", -(c.p1.x - step_target).norm()});
    auto int_slack = [&](const PepPoint& pi, const PepPoint& pj) {
        return pi.f - pj.f - dot(pj.g, pi.x - pj.x) - (pi.g - pj.g).norm2() / (2.0 * L);
    };
    out.push_back({"int_0_1", int_slack(c.p0, c.p1)});
    out.push_back({"int_1_0", int_slack(c.p1, c.p0)});
    if (c.criterion == PepCriterion::ToFstar) {
        out.push_back({"int_0_star", int_slack(c.p0, c.pstar)});
        out.push_back({"int_star_0", int_slack(c.pstar, c.p0)});
        out.push_back({"int_1_star", int_slack(c.p1, c.pstar)});
        out.push_back({"int_star_1", int_slack(c.pstar, c.p1)});
        out.push_back({"normalization", -std::abs(c.p0.f - c.pstar.f - 1.0)});
        out.push_back({"gstar_zero", -c.pstar.g.norm()});
    } else {
        out.push_back({"normalization", -std::abs(c.p0.f - c.p1.f - 1.0)});
    }
    out.push_back({"g0_canonical", -std::abs(c.p0.g.y)});
    return out;
}

double candidate_min_slack(const PepCandidate& c) {
    double m = 0.0;
    bool first = true;
    for (const auto& s : candidate_slacks(c)) {
        if (first || s.value < m) m = s.value;
        first = false;
    }
    return m;
}

SearchResult search_one_step(const SearchConfig& cfg) {
    if (!(cfg.h > 0.0)) throw std::invalid_argument("search: h must be positive");
    if (!(cfg.delta >= 0.0 && cfg.delta < 1.0)) {
        throw std::invalid_argument("search: delta must lie in [0, 1)");
    }
    if (!(cfg.h < 2.0 / (1.0 + cfg.delta) * (1.0 + 1e-12))) {
        throw std::domain_error("search: h is in the divergence region");
    }
    if (cfg.dimension != 1 && cfg.dimension != 2) {
        throw std::invalid_argument("search: dimension must be 1 or 2");
    }
    if (cfg.budget < 1) throw std::invalid_argument("search: budget must be >= 1");

    std::vector<State> seeds = analytic_seeds(cfg.h, cfg.delta, cfg.criterion, cfg.dimension);
    for (const auto& cand : cfg.extra_seeds) seeds.push_back(from_candidate(cand));
    const int n_seeds = static_cast<int>(seeds.size());

    // Per-coordinate proposal scales.
    const double scale[kDim] = {0.3, 0.3, 0.3, 0.3, 0.3, 0.2, 0.5, 0.5};

    SearchResult result;
    for (int start = 0; start < cfg.budget; ++start) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(start)));
        State y;
        if (start < n_seeds) {
            y = seeds[start];
        } else if (start < 4 * n_seeds) {
            y = seeds[start % n_seeds];
            for (double& c : y.y) c += 0.05 * rng.gauss();
        } else {
            y.y[0] = rng.uniform(0.2, cfg.criterion == PepCriterion::ToFstar ? kSqrt2 : 3.0);
            y.y[1] = y.y[0] * rng.uniform(1.0 - cfg.delta, 1.0 + cfg.delta);
            y.y[2] = y.y[0] * rng.uniform(-cfg.delta, cfg.delta);
            y.y[3] = rng.uniform(-1.5, 1.5);
            y.y[4] = rng.uniform(-1.5, 1.5);
            y.y[5] = rng.uniform(0.0, 1.0);
            y.y[6] = -rng.uniform(1.0, 3.0);
            y.y[7] = rng.uniform(-2.0, 2.0);
        }

        Eval cur = evaluate(y, cfg.h, cfg.delta, cfg.criterion, cfg.dimension);
        y = cur.repaired;
        double sigma = 0.25;
        const int n_active = cfg.criterion == PepCriterion::ToFstar ? kDim : 5;
        for (int it = 0; it < cfg.refine_iters; ++it) {
            State prop = y;
            if (4 * it < 3 * cfg.refine_iters) {
                for (int j = 0; j < n_active; ++j) prop.y[j] += sigma * scale[j] * rng.gauss();
            } else {
                // coordinate-wise polish
                const int j = static_cast<int>(rng.next_u64() % n_active);
                prop.y[j] += sigma * scale[j] * rng.gauss();
            }
            Eval e = evaluate(prop, cfg.h, cfg.delta, cfg.criterion, cfg.dimension);
            if (e.penalized > cur.penalized) {
                cur = e;
                y = e.repaired;
                sigma = std::min(sigma * 1.02, 0.5);
            } else {
                sigma = std::max(sigma * 0.98, 1e-10);
            }
        }

        if (cur.violation > 1e-12) continue;  // rounding-level residue is fine
        PepCandidate cand = assemble(y, cfg.h, cfg.delta, cfg.criterion, cfg.dimension);
        if (candidate_min_slack(cand) < -cfg.feas_tol) continue;
        if (!result.found || cand.objective > result.value) {
            result.found = true;
            result.value = cand.objective;
            result.best = cand;
            result.best_start = start;
        }
    }
    return result;
}

CompareResult compare_1d_2d(double h, double delta, int budget, std::uint64_t seed) {
    CompareResult cr;
    SearchConfig cfg;
    cfg.h = h;
    cfg.delta = delta;
    cfg.criterion = PepCriterion::ToFstar;
    cfg.budget = budget;
    cfg.seed = seed;
    cfg.dimension = 1;
    cr.dim1 = search_one_step(cfg);
    cfg.dimension = 2;
    if (cr.dim1.found) cfg.extra_seeds.push_back(cr.dim1.best);
    cr.dim2 = search_one_step(cfg);
    return cr;
}

OrthoDiagnostic orthogonality_diagnostic(const PepCandidate& c) {
    OrthoDiagnostic d;
    const Vec err = c.d0 - c.p0.g;
    const double en = err.norm();
    const double gn = c.p0.g.norm();
    const double dn = c.d0.norm();
    if (en <= 1e-15 || gn <= 1e-15) return d;  // exact oracle or vanished gradient
    d.defined = true;
    d.error_vs_gradient = dot(err, c.p0.g) / (en * gn);
    d.error_vs_direction = dn > 1e-15 ? dot(err, c.d0) / (en * dn) : 0.0;
    return d;
}

namespace {

void json_vec(std::ostringstream& os, const char* key, const Vec& v) {
    os << "\"" << key << "\":[" << fmt_double(v.x);
    if (v.dim == 2) os << "," << fmt_double(v.y);
    os << "]";
}

void json_point(std::ostringstream& os, const char* key, const PepPoint& p) {
    os << "\"" << key << "\":{";
    json_vec(os, "x", p.x);
    os << ",";
    json_vec(os, "g", p.g);
    os << ",\"f\":" << fmt_double(p.f) << "}";
}

}  // namespace

std::string candidate_json(const PepCandidate& c) {
    std::ostringstream os;
    os << "{\"criterion\":\"" << to_string(c.criterion) << "\"";
    os << ",\"h\":" << fmt_double(c.h) << ",\"delta\":" << fmt_double(c.delta) << ",";
    json_point(os, "p0", c.p0);
    os << ",";
    json_point(os, "p1", c.p1);
    if (c.criterion == PepCriterion::ToFstar) {
        os << ",";
        json_point(os, "pstar", c.pstar);
    }
    os << ",";
    json_vec(os, "d0", c.d0);
    os << ",\"objective\":" << fmt_double(c.objective);
    os << ",\"slacks\":{";
    bool sep = false;
    for (const auto& s : candidate_slacks(c)) {
        if (sep) os << ",";
        os << "\"" << s.name << "\":" << fmt_double(s.value);
        sep = true;
    }
    os << "}}";
    return os.str();
}

}  // namespace igd
