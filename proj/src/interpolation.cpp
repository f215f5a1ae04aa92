#include "igd/interpolation.hpp"

#include <stdexcept>

namespace igd {

InterpolationReport interpolation_check(std::span<const PepPoint> points, double L, double tol) {
    if (!(L > 0.0)) throw std::invalid_argument("interpolation_check: L must be positive");
    const int n = static_cast<int>(points.size());
    for (int i = 1; i < n; ++i) {
        if (points[i].x.dim != points[0].x.dim || points[i].g.dim != points[0].x.dim) {
            throw std::invalid_argument("interpolation_check: points must share one dimension");
        }
    }
    InterpolationReport rep;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const PepPoint& pi = points[i];
            const PepPoint& pj = points[j];
            const double slack = pi.f - pj.f - dot(pj.g, pi.x - pj.x) -
                                 (pi.g - pj.g).norm2() / (2.0 * L);
            if (first || slack < rep.min_slack) {
                rep.min_slack = slack;
                rep.worst_i = i;
                rep.worst_j = j;
                first = false;
            }
        }
    }
    if (first) rep.min_slack = 0.0;
    rep.ok = rep.min_slack >= -tol;
    return rep;
}

}  // namespace igd
