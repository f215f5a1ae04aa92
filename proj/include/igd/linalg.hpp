#pragma once

#include <array>

namespace igd {

using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// Eigenvalues of a symmetric matrix, ascending. The 3x3 version uses the
// closed-form characteristic polynomial and falls back to Jacobi sweeps when
// the closed form leaves a visible characteristic-polynomial residual.
std::array<double, 2> sym_eig2(const Mat2& m);
std::array<double, 3> sym_eig3(const Mat3& m);

// Cyclic Jacobi iteration; exposed separately so tests can cross-check the
// closed form against an independent route.
std::array<double, 3> jacobi_eig3(const Mat3& m);

double min_eig(const Mat2& m);
double min_eig(const Mat3& m);

}  // namespace igd
