#pragma once

#include <string>

#include "igd/vec.hpp"

namespace igd {

enum class InstanceKind { Huber, Quadratic };

// Worst-case test function. Both kinds are radially symmetric with the
// minimizer at the origin and f* = 0, so they evaluate in dimension 1 or 2:
//   Quadratic: f(x) = L|x|^2/2
//   Huber:     f(x) = L|x|^2/2 inside |x| < t, slope*|x| - slope^2/(2L)
//              outside, with t = slope/L (gradient-continuous at the kink).
// Generated instances are normalized to f(x_start) - f* = 1.
struct Instance {
    InstanceKind kind = InstanceKind::Quadratic;
    double L = 1.0;
    double slope = 0.0;      // Huber only
    double threshold = 0.0;  // Huber only, slope / L
    Vec x_start;
    int dimension = 1;

    double value(const Vec& x) const;
    Vec gradient(const Vec& x) const;
    double f_star() const { return 0.0; }

    std::string descriptor_json() const;
};

// Left-regime worst case: slope s with s^2 = 1/(n h (1-delta) + 1/2) for
// L = 1, start point n*h*(1-delta)*s + s; general L by coordinate scaling
// x -> x/sqrt(L), which preserves the unit initial gap.
Instance make_huber(double delta, double h, int n, double L = 1.0, int dimension = 1);

// Right-regime worst case: f(x) = L|x|^2/2 started at |x| = sqrt(2/L).
Instance make_quadratic(double L = 1.0, int dimension = 1);

enum class OracleKind { Exact, Scaled, Orthogonal };

// Maps (x, grad f(x)) to the direction d used by the iteration. Every
// output satisfies |d - g| <= delta |g|; construction guarantees it and
// direction() re-verifies on each call.
struct Oracle {
    OracleKind kind = OracleKind::Exact;
    double delta = 0.0;
    double factor = 1.0;  // Scaled only
    int orientation = +1; // Orthogonal only: +90 or -90 degree rotation

    Vec direction(const Vec& x, const Vec& grad) const;
};

Oracle oracle_exact();

// d = factor * g; admissible when |factor - 1| <= delta.
Oracle oracle_scaled(double factor, double delta);

// d = (1 - delta^2) g + delta sqrt(1 - delta^2) g_perp, the direction of
// maximal angular deviation inside the inexactness ball: the error has norm
// exactly delta|g| and is orthogonal to d itself (d is tangent to the ball),
// so |d| = sqrt(1 - delta^2)|g|. Requires 2-dimensional gradients.
Oracle oracle_orthogonal(double delta, int orientation = +1);

}  // namespace igd
