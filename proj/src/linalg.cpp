#include "igd/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace igd {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double char_poly3(const Mat3& m, double x) {
    const double a = m[0][0] - x, b = m[0][1], c = m[0][2];
    const double d = m[1][1] - x, e = m[1][2];
    const double f = m[2][2] - x;
    return a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c);
}

double frobenius(const Mat3& m) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
}

}  // namespace

std::array<double, 2> sym_eig2(const Mat2& m) {
    const double t = 0.5 * (m[0][0] + m[1][1]);
    const double g = 0.5 * (m[0][0] - m[1][1]);
    const double r = std::sqrt(g * g + m[0][1] * m[0][1]);
    return {t - r, t + r};
}

std::array<double, 3> jacobi_eig3(const Mat3& in) {
    Mat3 m = in;
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = std::abs(m[0][1]) + std::abs(m[0][2]) + std::abs(m[1][2]);
        double scale = std::abs(m[0][0]) + std::abs(m[1][1]) + std::abs(m[2][2]) + off;
        if (off <= 1e-15 * std::max(scale, 1e-300)) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (m[p][q] == 0.0) continue;
                const double theta = 0.5 * (m[q][q] - m[p][p]) / m[p][q];
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                Mat3 r = m;
                for (int k = 0; k < 3; ++k) {
                    r[p][k] = c * m[p][k] - s * m[q][k];
                    r[q][k] = s * m[p][k] + c * m[q][k];
                }
                Mat3 r2 = r;
                for (int k = 0; k < 3; ++k) {
                    r2[k][p] = c * r[k][p] - s * r[k][q];
                    r2[k][q] = s * r[k][p] + c * r[k][q];
                }
                m = r2;
            }
        }
    }
    std::array<double, 3> ev{m[0][0], m[1][1], m[2][2]};
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::array<double, 3> sym_eig3(const Mat3& m) {
    const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if (p1 == 0.0) {
        std::array<double, 3> ev{m[0][0], m[1][1], m[2][2]};
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                      (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
    const double detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                        b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                        b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    std::array<double, 3> ev;
    ev[2] = q + 2.0 * p * std::cos(phi);
    ev[0] = q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0);
    ev[1] = 3.0 * q - ev[0] - ev[2];
    std::sort(ev.begin(), ev.end());

    // Fallback to Jacobi where the closed form degrades: clustered
    // eigenvalues (acos is ill-conditioned at |r| ~ 1, costing sqrt(eps))
    // or a visible characteristic-polynomial residual.
    const double scale = std::max(frobenius(m), 1e-300);
    if (std::min(ev[1] - ev[0], ev[2] - ev[1]) <= 1e-4 * scale) {
        return jacobi_eig3(m);
    }
    for (double e : ev) {
        if (std::abs(char_poly3(m, e)) > 1e-10 * scale * scale * scale) {
            return jacobi_eig3(m);
        }
    }
    return ev;
}

double min_eig(const Mat2& m) { return sym_eig2(m)[0]; }
double min_eig(const Mat3& m) { return sym_eig3(m)[0]; }

}  // namespace igd
