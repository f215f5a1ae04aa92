#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "igd/cubic.hpp"

namespace igd::test {

// Independent root enumeration for cross-checking the closed-form cubic
// solver: dense sign-change scan with bisection, plus stationary points of
// the polynomial that are themselves roots (even-multiplicity roots leave
// no sign change).
inline std::vector<double> brute_force_roots(const CubicCoeffs& p, double lo, double hi,
                                             int steps = 200000) {
    std::vector<double> roots;
    auto bisect = [&](double a, double b, auto&& f) {
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (a + b);
            if (f(a) * f(m) <= 0.0) b = m;
            else a = m;
        }
        return 0.5 * (a + b);
    };
    auto fp = [&](double x) { return p.eval(x); };
    auto fd = [&](double x) { return p.deriv(x); };

    double prev = fp(lo);
    double prev_d = fd(lo);
    for (int i = 1; i <= steps; ++i) {
        const double x = lo + (hi - lo) * i / steps;
        const double cur = fp(x);
        if (prev == 0.0) roots.push_back(lo + (hi - lo) * (i - 1) / steps);
        else if (prev * cur < 0.0) roots.push_back(bisect(lo + (hi - lo) * (i - 1) / steps, x, fp));
        const double cur_d = fd(x);
        if (prev_d * cur_d < 0.0) {
            const double s = bisect(lo + (hi - lo) * (i - 1) / steps, x, fd);
            if (p.relative_residual(s) <= 1e-9) roots.push_back(s);
        }
        prev = cur;
        prev_d = cur_d;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-7; }),
                roots.end());
    return roots;
}

}  // namespace igd::test
