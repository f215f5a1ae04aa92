#pragma once

#include <array>

namespace igd {

// Real cubic c3*x^3 + c2*x^2 + c1*x + c0, highest degree first.
struct CubicCoeffs {
    double c3 = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double eval(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    double deriv(double x) const { return (3.0 * c3 * x + 2.0 * c2) * x + c1; }

    // |p(x)| relative to the magnitude of its terms; 0 for an exact root.
    double relative_residual(double x) const;
};

// All real roots with geometric multiplicities, ascending. count is the
// number of distinct real roots (1, 2 or 3); multiplicities sum to 3 when
// the conjugate pair is real, to 1 otherwise.
struct CubicRoots {
    std::array<double, 3> root{};
    std::array<int, 3> mult{};
    int count = 0;

    double largest() const { return root[count - 1]; }
};

// Requires c3 != 0. Discriminant classification (trigonometric form for three
// real roots, Cardano otherwise) followed by a Newton polish of every root.
CubicRoots solve_cubic(const CubicCoeffs& p);

}  // namespace igd
