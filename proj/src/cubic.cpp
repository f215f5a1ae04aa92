#include "igd/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace igd {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double newton_polish(const CubicCoeffs& p, double x) {
    for (int it = 0; it < 8; ++it) {
        double f = p.eval(x);
        double df = p.deriv(x);
        if (df == 0.0) break;
        double step = f / df;
        x -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
    }
    return x;
}

}  // namespace

double CubicCoeffs::relative_residual(double x) const {
    double num = std::abs(eval(x));
    double den = std::abs(c3 * x * x * x) + std::abs(c2 * x * x) + std::abs(c1 * x) + std::abs(c0);
    if (den == 0.0) return num;
    return num / den;
}

CubicRoots solve_cubic(const CubicCoeffs& p) {
    if (p.c3 == 0.0) {
        throw std::invalid_argument("solve_cubic: leading coefficient is zero");
    }
    const double a = p.c2 / p.c3;
    const double b = p.c1 / p.c3;
    const double c = p.c0 / p.c3;

    // Depressed form, Numerical-Recipes style quantities.
    const double q = (a * a - 3.0 * b) / 9.0;
    const double r = (a * (2.0 * a * a - 9.0 * b) + 27.0 * c) / 54.0;
    const double r2 = r * r;
    const double q3 = q * q * q;

    struct RawRoot {
        double x;
        int mult;
    };
    RawRoot raw[3];
    int n = 0;
    const double disc_scale = std::max(std::abs(r2), std::abs(q3));
    if (r2 < q3 * (1.0 - 1e-14)) {
        // Three distinct real roots.
        double t = r / std::sqrt(q3);
        t = std::clamp(t, -1.0, 1.0);
        const double theta = std::acos(t);
        const double f = -2.0 * std::sqrt(q);
        raw[n++] = {f * std::cos(theta / 3.0) - a / 3.0, 1};
        raw[n++] = {f * std::cos((theta + 2.0 * kPi) / 3.0) - a / 3.0, 1};
        raw[n++] = {f * std::cos((theta - 2.0 * kPi) / 3.0) - a / 3.0, 1};
    } else if (std::abs(r2 - q3) <= 1e-13 * std::max(1e-300, disc_scale)) {
        // Repeated roots: triple if q ~ 0, otherwise a double plus a simple
        // one. With |r| = q^{3/2}, cbrt(r) carries the sign of r.
        if (std::abs(q) <= 1e-13 * (1.0 + a * a)) {
            raw[n++] = {-a / 3.0, 3};
        } else {
            const double s = std::cbrt(r);
            raw[n++] = {s - a / 3.0, 2};
            raw[n++] = {-2.0 * s - a / 3.0, 1};
        }
    } else {
        // One real root (Cardano); the other two form a conjugate pair.
        const double e = std::sqrt(r2 - q3);
        double u = -(r >= 0.0 ? std::cbrt(r + e) : -std::cbrt(-r + e));
        const double v = (u == 0.0) ? 0.0 : q / u;
        raw[n++] = {(u + v) - a / 3.0, 1};
    }

    for (int i = 0; i < n; ++i) {
        if (raw[i].mult == 1) raw[i].x = newton_polish(p, raw[i].x);
    }
    std::sort(raw, raw + n, [](const RawRoot& l, const RawRoot& rr) { return l.x < rr.x; });

    // Merge clusters the trigonometric branch produces near repeated roots.
    CubicRoots out;
    for (int i = 0; i < n; ++i) {
        const double scale = 1.0 + std::abs(raw[i].x);
        if (out.count > 0 && std::abs(raw[i].x - out.root[out.count - 1]) <= 1e-8 * scale) {
            out.mult[out.count - 1] += raw[i].mult;
        } else {
            out.root[out.count] = raw[i].x;
            out.mult[out.count] = raw[i].mult;
            ++out.count;
        }
    }
    return out;
}

}  // namespace igd
