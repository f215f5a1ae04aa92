#pragma once

#include <array>
#include <string>
#include <vector>

#include "igd/linalg.hpp"
#include "igd/rates.hpp"

namespace igd {

// Multipliers of the one-step sum-of-inequalities proof: the two
// interpolation inequalities get weights lambda+1 and lambda, the
// inexactness inequality gets weight b, and rho is the certified
// coefficient of |g1|^2 (so the rate is 1/rho).
struct Certificate {
    Regime regime = Regime::Left;
    double lambda = 0.0;
    double b = 0.0;
    double rho = 0.0;
};

// Closed-form multipliers per regime; rejects delta = 0 (exact case has its
// own 2x2 certificate) and the right-regime formulas when h(1+delta) <= 1.
Certificate certificate_params(double h, double delta);

// Residual quadratic form of the proof over z = (g0, g1, D~) with
// D~ = (d0 - g0)/delta, split as a = a1 + a2 where a2 = v v^T is rank one
// PSD (Schur complement of the bottom-right entry) and a1 has a zero third
// row and column.
struct ProofMatrices {
    Mat3 a{};
    Mat3 a1{};
    Mat3 a2{};
    std::array<double, 3> schur_vec{};
};

// Requires cert.b > 0 (the Schur pivot); b = 0 is the exact-gradient path.
ProofMatrices build_proof_matrices(double h, double delta, const Certificate& cert);

struct CertCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct CertReport {
    Certificate cert;
    double min_eig_a1 = 0.0;
    double rank1_residual = 0.0;   // max entrywise |a2 - v v^T|
    double second_singular = 0.0;  // second-largest |eigenvalue| of a2
    double split_residual = 0.0;   // max entrywise |a - a1 - a2|
    double implied_rate = 0.0;     // 1 / rho
    double rate_gap = 0.0;         // |1/rho - C(h, delta)|
    std::vector<CertCheck> checks;
    std::vector<std::string> failures;
    bool passed = false;
};

// Machine-checks the one-step proof at (h, delta): a1 is PSD up to psd_tol,
// a = a1 + a2 with a2 rank one, the implied rate matches the closed-form
// C(h, delta) within 1e-8 absolute, and in the intermediate regime the
// saturated entries a1[0][0], a1[0][1] vanish. The rate-gap check is
// absolute, so it stops being meaningful within ~1e-5 of h_max where C
// blows up; rate_gap / C stays at rounding level there regardless.
CertReport verify_certificate(double h, double delta, double psd_tol = 1e-8,
                              double alg_tol = 1e-10);

// Exact-gradient counterpart: the 2x2 matrix with lambda* = 1 for
// h <= 3/2, lambda* = (2-h)/(h-1) above, and rho* = min(h, ((1-h)^-2-1)/2).
CertReport verify_certificate_exact(double h, double psd_tol = 1e-8);

// 2x2 proof matrix of the exact case, exposed for the delta -> 0 reduction
// check against the top-left block of the inexact matrix.
Mat2 exact_proof_matrix(double h, double lambda, double rho);

}  // namespace igd
