#pragma once

#include <span>
#include <vector>

#include "igd/vec.hpp"

namespace igd {

// One labeled point of a smooth convex dataset: position, gradient, value.
struct PepPoint {
    Vec x;
    Vec g;
    double f = 0.0;
};

struct InterpolationReport {
    double min_slack = 0.0;
    int worst_i = -1;
    int worst_j = -1;
    bool ok = true;
};

// Pairwise smooth-convex interpolation slacks
//   f_i - f_j - <g_j, x_i - x_j> - |g_i - g_j|^2 / (2L)
// over all ordered pairs. A dataset extends to an L-smooth convex function
// exactly when every slack is nonnegative; the report carries the minimum
// slack and the violating pair when it dips below -tol.
InterpolationReport interpolation_check(std::span<const PepPoint> points, double L,
                                        double tol = 1e-12);

}  // namespace igd
