#include "igd/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "igd/certificate.hpp"
#include "igd/fmt.hpp"
#include "igd/rates.hpp"

namespace igd {

void SweepConfig::validate() const {
    if (deltas.empty()) throw std::invalid_argument("sweep: delta list must be non-empty");
    if (h_points < 1) throw std::invalid_argument("sweep: h grid resolution must be positive");
    if (n_list.empty()) throw std::invalid_argument("sweep: N list must be non-empty");
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("sweep: format must be csv or json");
    }
}

namespace {

std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt_double(v[i]);
    }
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

double grid_upper(const SweepConfig& cfg, double delta) {
    const double hm = regime_boundaries(delta).h_max;
    if (cfg.h_max_abs >= 0.0) return std::min(cfg.h_max_abs, hm);
    return cfg.h_max_frac * hm;
}

}  // namespace

std::string rates_table(const SweepConfig& cfg) {
    cfg.validate();
    std::ostringstream os;
    const std::string config_line = "# config: rates --delta " + join_doubles(cfg.deltas) +
                                    " --h-min " + fmt_double(cfg.h_min) +
                                    (cfg.h_max_abs >= 0.0
                                         ? " --h-max " + fmt_double(cfg.h_max_abs)
                                         : " --h-max-frac " + fmt_double(cfg.h_max_frac)) +
                                    " --h-points " + std::to_string(cfg.h_points) + " --n " +
                                    join_ints(cfg.n_list);

    const bool csv = cfg.format == "csv";
    if (csv) {
        os << config_line << "\n";
        os << "delta,h,regime,C,C_tilde,lambda_tilde";
        for (int n : cfg.n_list) os << ",C_tilde_" << n << ",lower_" << n;
        os << "\n";
    } else {
        os << "{\"config\":\"" << config_line.substr(2) << "\",\"rows\":[";
    }

    bool first_row = true;
    for (double d : cfg.deltas) {
        const double hi = grid_upper(cfg, d);
        if (hi < cfg.h_min) {
            throw std::invalid_argument("sweep: empty h grid (upper end below --h-min)");
        }
        for (int i = 0; i < cfg.h_points; ++i) {
            const double h =
                cfg.h_points == 1 ? cfg.h_min
                                  : cfg.h_min + (hi - cfg.h_min) * i / (cfg.h_points - 1.0);
            const Regime reg = classify_regime(h, d);
            const double c = rate_one_step_to_f1(h, d);
            const double ct = rate_one_step_to_fstar(h, d);
            const bool mid = d > 0.0 && reg == Regime::Intermediate;
            const double lam = mid ? lambda_tilde(h, d) : 0.0;
            if (csv) {
                os << fmt_double(d) << "," << fmt_double(h) << "," << to_string(reg) << ","
                   << fmt_double(c) << "," << fmt_double(ct) << ",";
                if (mid) os << fmt_double(lam);
                for (int n : cfg.n_list) {
                    os << "," << fmt_double(rate_n_steps(h, d, n)) << ","
                       << fmt_double(lower_bound_n(h, d, n));
                }
                os << "\n";
            } else {
                if (!first_row) os << ",";
                os << "{\"delta\":" << fmt_double(d) << ",\"h\":" << fmt_double(h)
                   << ",\"regime\":\"" << to_string(reg) << "\",\"C\":";
                if (std::isfinite(c)) os << fmt_double(c);
                else os << "null";
                os << ",\"C_tilde\":" << fmt_double(ct) << ",\"lambda_tilde\":";
                if (mid) os << fmt_double(lam);
                else os << "null";
                for (int n : cfg.n_list) {
                    os << ",\"C_tilde_" << n << "\":" << fmt_double(rate_n_steps(h, d, n))
                       << ",\"lower_" << n << "\":" << fmt_double(lower_bound_n(h, d, n));
                }
                os << "}";
                first_row = false;
            }
        }
    }
    if (!csv) os << "]}";
    return os.str();
}

CertifyOutcome certify_report(const std::vector<double>& deltas, int grid_points,
                              int exact_points, const std::string& format) {
    if (deltas.empty()) throw std::invalid_argument("certify: delta list must be non-empty");
    if (grid_points < 1 || exact_points < 0) {
        throw std::invalid_argument("certify: grid sizes must be positive");
    }
    CertifyOutcome out;
    std::ostringstream body;
    std::ostringstream failures;
    bool first_fail = true;

    const bool csv = format == "csv";
    auto record = [&](double d, double h, const CertReport& rep, bool exact) {
        ++out.total;
        if (!rep.passed) ++out.failed;
        if (csv) {
            body << fmt_double(d) << "," << fmt_double(h) << "," << (exact ? "exact" : "inexact")
                 << "," << (rep.passed ? "pass" : "fail") << "," << fmt_double(rep.min_eig_a1)
                 << "," << fmt_double(rep.rate_gap) << "," << fmt_double(rep.rank1_residual)
                 << "\n";
        }
        if (!rep.passed) {
            if (!first_fail) failures << ",";
            failures << "{\"delta\":" << fmt_double(d) << ",\"h\":" << fmt_double(h)
                     << ",\"kind\":\"" << (exact ? "exact" : "inexact") << "\",\"violated\":[";
            for (std::size_t i = 0; i < rep.failures.size(); ++i) {
                if (i) failures << ",";
                failures << "\"" << rep.failures[i] << "\"";
            }
            failures << "]}";
            first_fail = false;
        }
    };

    for (double d : deltas) {
        const double hm = regime_boundaries(d).h_max;
        for (int i = 1; i <= grid_points; ++i) {
            const double h = hm * i / (grid_points + 1.0);
            record(d, h, verify_certificate(h, d), false);
        }
    }
    for (int i = 1; i <= exact_points; ++i) {
        const double h = 2.0 * i / (exact_points + 1.0);
        record(0.0, h, verify_certificate_exact(h), true);
    }

    std::ostringstream os;
    if (csv) {
        os << "# config: certify --delta " << join_doubles(deltas) << " --grid " << grid_points
           << " --exact-grid " << exact_points << "\n";
        os << "delta,h,kind,status,min_eig_a1,rate_gap,rank1_residual\n" << body.str();
    } else {
        os << "{\"config\":\"certify --delta " << join_doubles(deltas) << " --grid "
           << grid_points << " --exact-grid " << exact_points << "\",\"total\":" << out.total
           << ",\"failed\":" << out.failed << ",\"failures\":[" << failures.str() << "]}";
    }
    out.report = os.str();
    return out;
}

std::string hopt_table(const std::vector<double>& deltas, const std::vector<int>& n_list,
                       const std::string& format) {
    if (deltas.empty() || n_list.empty()) {
        throw std::invalid_argument("hopt: delta and N lists must be non-empty");
    }
    std::ostringstream os;
    const bool csv = format == "csv";
    const std::string config = "hopt --delta " + join_doubles(deltas) + " --n " +
                               join_ints(n_list);
    if (csv) {
        os << "# config: " << config << "\n";
        os << "delta,n,h_opt,rate_opt,h_ir,rate_at_h_ir,ratio\n";
    } else {
        os << "{\"config\":\"" << config << "\",\"rows\":[";
    }
    bool first = true;
    for (double d : deltas) {
        const double h_ir = approx_optimal_stepsize(d);
        for (int n : n_list) {
            const StepsizeChoice opt = optimal_stepsize(d, n);
            const double rate_ir = rate_n_steps(h_ir, d, n);
            const double ratio = rate_ir / opt.rate;
            if (csv) {
                os << fmt_double(d) << "," << n << "," << fmt_double(opt.h_opt) << ","
                   << fmt_double(opt.rate) << "," << fmt_double(h_ir) << ","
                   << fmt_double(rate_ir) << "," << fmt_double(ratio) << "\n";
            } else {
                if (!first) os << ",";
                os << "{\"delta\":" << fmt_double(d) << ",\"n\":" << n
                   << ",\"h_opt\":" << fmt_double(opt.h_opt)
                   << ",\"rate_opt\":" << fmt_double(opt.rate)
                   << ",\"h_ir\":" << fmt_double(h_ir)
                   << ",\"rate_at_h_ir\":" << fmt_double(rate_ir)
                   << ",\"ratio\":" << fmt_double(ratio) << "}";
                first = false;
            }
        }
    }
    if (!csv) os << "]}";
    return os.str();
}

HmaxOutcome hmax_table(double d_min, double d_max, double d_step, const std::string& format) {
    if (!(d_step > 0.0) || d_max < d_min) {
        throw std::invalid_argument("hmax: invalid delta grid");
    }
    HmaxOutcome out;
    std::ostringstream os;
    const bool csv = format == "csv";
    const std::string config = "hmax --delta-grid " + fmt_double(d_min) + ":" +
                               fmt_double(d_max) + ":" + fmt_double(d_step);
    if (csv) {
        os << "# config: " << config << "\n";
        os << "delta,ours,prior,ratio\n";
    } else {
        os << "{\"config\":\"" << config << "\",\"rows\":[";
    }
    bool first = true;
    const int count = static_cast<int>(std::floor((d_max - d_min) / d_step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) {
        const double d = d_min + i * d_step;
        const HmaxComparison c = compare_h_max(d);
        if (c.ours < c.prior) out.dominates = false;
        if (csv) {
            os << fmt_double(d) << "," << fmt_double(c.ours) << "," << fmt_double(c.prior)
               << "," << fmt_double(c.ratio) << "\n";
        } else {
            if (!first) os << ",";
            os << "{\"delta\":" << fmt_double(d) << ",\"ours\":" << fmt_double(c.ours)
               << ",\"prior\":" << fmt_double(c.prior) << ",\"ratio\":" << fmt_double(c.ratio)
               << "}";
            first = false;
        }
    }
    if (!csv) os << "]}";
    out.report = os.str();
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write to " + tmp);
        f << content;
        if (!f) throw std::runtime_error("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace igd
