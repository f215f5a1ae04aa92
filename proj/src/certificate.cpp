#include "igd/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace igd {

namespace {

void push_check(CertReport& rep, const std::string& name, double value, double threshold,
                bool pass) {
    rep.checks.push_back({name, value, threshold, pass});
    if (!pass) rep.failures.push_back(name);
}

// value must not exceed threshold
void push_upper(CertReport& rep, const std::string& name, double value, double threshold) {
    push_check(rep, name, value, threshold, value <= threshold);
}

// value must be at least threshold
void push_lower(CertReport& rep, const std::string& name, double value, double threshold) {
    push_check(rep, name, value, threshold, value >= threshold);
}

}  // namespace

Certificate certificate_params(double h, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("certificate_params: delta must lie in (0, 1)");
    }
    const RegimeBounds bnd = regime_boundaries(delta);
    if (!(h > 0.0 && h < bnd.h_max)) {
        throw std::domain_error("certificate_params: h must lie in (0, h_max)");
    }
    Certificate c;
    c.regime = classify_regime(h, delta);
    switch (c.regime) {
        case Regime::Left:
            c.lambda = 1.0;
            c.b = h * delta / 2.0;
            c.rho = h * (1.0 - delta);
            break;
        case Regime::Intermediate: {
            const double lam = lambda_tilde(h, delta);
            c.lambda = lam;
            c.b = 1.0 - (h / 2.0) * lam - 1.0 / (2.0 * (1.0 + lam));
            c.rho = h - 1.0 + (h / 2.0) * lam + (h - 1.0) / (2.0 * lam);
            break;
        }
        case Regime::Right: {
            const double u = h * (1.0 + delta);
            if (u <= 1.0) {
                throw std::domain_error(
                    "certificate_params: right-regime formulas need h(1+delta) > 1");
            }
            c.lambda = (2.0 - u) / (u - 1.0);
            c.b = h * delta / (2.0 * (u - 1.0));
            c.rho = u * (2.0 - u) / (2.0 * (u - 1.0) * (u - 1.0));
            break;
        }
    }
    return c;
}

ProofMatrices build_proof_matrices(double h, double delta, const Certificate& cert) {
    if (!(cert.b > 0.0)) {
        throw std::invalid_argument(
            "build_proof_matrices: b must be positive (b = 0 is the exact-case 2x2 path)");
    }
    const double lam = cert.lambda;
    const double b = cert.b;
    const double rho = cert.rho;
    const double hd = h * delta;
    const double k = delta * delta * h * h / (2.0 * b);

    ProofMatrices pm;
    pm.a = {{{2.0 * (1.0 - h) * lam - 2.0 * b + 1.0, (h - 2.0) * lam - 1.0 + h, -hd * lam},
             {(h - 2.0) * lam - 1.0 + h, 2.0 * lam + 1.0 - 2.0 * rho, hd * (lam + 1.0)},
             {-hd * lam, hd * (lam + 1.0), 2.0 * b}}};

    pm.a1 = {{{2.0 * (1.0 - h) * lam - 2.0 * b + 1.0 - k * lam * lam,
               (h - 2.0) * lam - 1.0 + h + k * lam * (lam + 1.0), 0.0},
              {(h - 2.0) * lam - 1.0 + h + k * lam * (lam + 1.0),
               2.0 * lam + 1.0 - 2.0 * rho - k * (lam + 1.0) * (lam + 1.0), 0.0},
              {0.0, 0.0, 0.0}}};

    const double s = std::sqrt(2.0 * b);
    pm.schur_vec = {-hd * lam / s, hd * (lam + 1.0) / s, s};
    pm.a2 = {{{k * lam * lam, -k * lam * (lam + 1.0), -hd * lam},
              {-k * lam * (lam + 1.0), k * (lam + 1.0) * (lam + 1.0), hd * (lam + 1.0)},
              {-hd * lam, hd * (lam + 1.0), 2.0 * b}}};
    return pm;
}

CertReport verify_certificate(double h, double delta, double psd_tol, double alg_tol) {
    CertReport rep;
    rep.cert = certificate_params(h, delta);
    const ProofMatrices pm = build_proof_matrices(h, delta, rep.cert);

    push_lower(rep, "multiplier_lambda_nonnegative", rep.cert.lambda, 0.0);
    push_lower(rep, "multiplier_b_nonnegative", rep.cert.b, 0.0);
    push_lower(rep, "rate_coefficient_positive", rep.cert.rho, 0.0);

    // a1's third row and column vanish: its spectrum is the 2x2 block's
    // plus a zero.
    const Mat2 block{{{pm.a1[0][0], pm.a1[0][1]}, {pm.a1[1][0], pm.a1[1][1]}}};
    rep.min_eig_a1 = std::min(0.0, min_eig(block));
    push_lower(rep, "a1_min_eigenvalue", rep.min_eig_a1, -psd_tol);

    double split = 0.0, rank1 = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            split = std::max(split, std::abs(pm.a[i][j] - pm.a1[i][j] - pm.a2[i][j]));
            rank1 = std::max(rank1,
                             std::abs(pm.a2[i][j] - pm.schur_vec[i] * pm.schur_vec[j]));
        }
    }
    rep.split_residual = split;
    rep.rank1_residual = rank1;
    push_upper(rep, "schur_split_entrywise", split, 1e-12);
    push_upper(rep, "a2_factorization_residual", rank1, 1e-12);

    const auto ev2 = sym_eig3(pm.a2);
    double e_abs[3] = {std::abs(ev2[0]), std::abs(ev2[1]), std::abs(ev2[2])};
    std::sort(e_abs, e_abs + 3);
    rep.second_singular = e_abs[1];
    push_upper(rep, "a2_second_singular_value", rep.second_singular, 1e-12 * std::max(e_abs[2], 1e-300));

    rep.implied_rate = 1.0 / rep.cert.rho;
    rep.rate_gap = std::abs(rep.implied_rate - rate_one_step_to_f1(h, delta));
    push_upper(rep, "implied_rate_matches_C", rep.rate_gap, 1e-8);

    if (rep.cert.regime == Regime::Intermediate) {
        push_upper(rep, "saturated_a1_00", std::abs(pm.a1[0][0]), alg_tol);
        push_upper(rep, "saturated_a1_01", std::abs(pm.a1[0][1]), alg_tol);
    }

    rep.passed = rep.failures.empty();
    return rep;
}

Mat2 exact_proof_matrix(double h, double lambda, double rho) {
    return {{{2.0 * (1.0 - h) * lambda + 1.0, (h - 2.0) * lambda - 1.0 + h},
             {(h - 2.0) * lambda - 1.0 + h, 2.0 * lambda + 1.0 - 2.0 * rho}}};
}

CertReport verify_certificate_exact(double h, double psd_tol) {
    if (!(h > 0.0 && h < 2.0)) {
        throw std::domain_error("verify_certificate_exact: h must lie in (0, 2)");
    }
    CertReport rep;
    rep.cert.regime = h <= 1.5 ? Regime::Left : Regime::Right;
    rep.cert.lambda = h <= 1.5 ? 1.0 : (2.0 - h) / (h - 1.0);
    rep.cert.b = 0.0;
    rep.cert.rho = h <= 1.5 ? h : (2.0 - h) * h / (2.0 * (h - 1.0) * (h - 1.0));

    const Mat2 a = exact_proof_matrix(h, rep.cert.lambda, rep.cert.rho);
    rep.min_eig_a1 = min_eig(a);
    push_lower(rep, "exact_matrix_min_eigenvalue", rep.min_eig_a1, -psd_tol);

    rep.implied_rate = 1.0 / rep.cert.rho;
    rep.rate_gap = std::abs(rep.implied_rate - rate_exact_one_step_to_f1(h));
    push_upper(rep, "implied_rate_matches_exact_C", rep.rate_gap, 1e-8);

    rep.passed = rep.failures.empty();
    return rep;
}

}  // namespace igd
