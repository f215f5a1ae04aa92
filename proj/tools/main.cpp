#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "igd/certificate.hpp"
#include "igd/fmt.hpp"
#include "igd/instances.hpp"
#include "igd/pep_search.hpp"
#include "igd/rates.hpp"
#include "igd/report.hpp"
#include "igd/simulator.hpp"

namespace {

// Lists are comma-separated; every element may itself be a min:max:step range.
std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(std::stod(item));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos) throw CLI::ValidationError("range must be min:max:step");
        const double lo = std::stod(item.substr(0, c1));
        const double hi = std::stod(item.substr(c1 + 1, c2 - c1 - 1));
        const double step = std::stod(item.substr(c2 + 1));
        if (step <= 0.0) throw CLI::ValidationError("range step must be positive");
        for (double v = lo; v <= hi + 1e-12; v += step) out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_double_list(text)) out.push_back(static_cast<int>(v + 0.5));
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
    } else {
        igd::write_file_atomic(out_path, content);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"worst-case rates, certificates and adversarial runs for "
                 "relatively inexact gradient descent"};
    // long flags only
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // ---- rates ----
    std::string rates_delta = "0,0.1,0.5,0.8";
    std::string rates_n = "1";
    igd::SweepConfig sweep;
    std::string rates_out;
    auto* cmd_rates = app.add_subcommand("rates", "rate tables over a stepsize grid");
    cmd_rates->set_help_flag("--help", "print help");
    cmd_rates->add_option("--delta", rates_delta, "delta list (comma/range)");
    cmd_rates->add_option("--h-min", sweep.h_min, "grid lower end");
    cmd_rates->add_option("--h-max", sweep.h_max_abs, "absolute grid upper end");
    cmd_rates->add_option("--h-max-frac", sweep.h_max_frac,
                          "grid upper end as a fraction of h_max(delta)");
    cmd_rates->add_option("--h-points", sweep.h_points, "grid resolution");
    cmd_rates->add_option("--n", rates_n, "iteration counts (comma/range)");
    cmd_rates->add_option("--format", sweep.format, "csv or json");
    cmd_rates->add_option("--out", rates_out, "output path (stdout if omitted)");

    // ---- certify ----
    std::string cert_delta = "0.1,0.5,0.8";
    int cert_grid = 100;
    int cert_exact_grid = 200;
    std::string cert_format = "json";
    std::string cert_out;
    auto* cmd_certify = app.add_subcommand("certify", "machine-check the dual certificates");
    cmd_certify->set_help_flag("--help", "print help");
    cmd_certify->add_option("--delta", cert_delta, "delta list (comma/range)");
    cmd_certify->add_option("--grid", cert_grid, "stepsize grid points per delta");
    cmd_certify->add_option("--exact-grid", cert_exact_grid, "exact-case grid points");
    cmd_certify->add_option("--format", cert_format, "csv or json");
    cmd_certify->add_option("--out", cert_out, "output path (stdout if omitted)");

    // ---- simulate ----
    std::string sim_instance = "huber";
    std::string sim_oracle = "worst";
    double sim_delta = 0.3, sim_h = 0.75, sim_L = 1.0;
    int sim_n = 20, sim_dim = 1;
    std::string sim_out;
    auto* cmd_sim = app.add_subcommand("simulate", "run the inexact descent on an instance");
    cmd_sim->set_help_flag("--help", "print help");
    cmd_sim->add_option("--instance", sim_instance, "huber or quadratic");
    cmd_sim->add_option("--oracle", sim_oracle,
                        "worst | exact | scaled:<factor> | orthogonal[:+|-]");
    cmd_sim->add_option("--delta", sim_delta, "inexactness level")->required();
    cmd_sim->add_option("--h", sim_h, "normalized stepsize")->required();
    cmd_sim->add_option("--n", sim_n, "iterations")->required();
    cmd_sim->add_option("--L", sim_L, "smoothness constant");
    cmd_sim->add_option("--dim", sim_dim, "instance dimension (1 or 2)");
    cmd_sim->add_option("--out", sim_out, "trace CSV path");

    // ---- search ----
    double srch_delta = 0.5, srch_h = -1.0;
    std::string srch_criterion = "fstar";
    int srch_dim = 2, srch_budget = 2000;
    std::uint64_t srch_seed = 0;
    bool srch_compare = false;
    std::string srch_out;
    auto* cmd_search = app.add_subcommand("search", "one-step worst-case search");
    cmd_search->set_help_flag("--help", "print help");
    cmd_search->add_option("--delta", srch_delta, "inexactness level")->required();
    cmd_search->add_option("--h", srch_h, "stepsize (defaults to the optimal one)");
    cmd_search->add_option("--criterion", srch_criterion, "fstar or f1");
    cmd_search->add_option("--dim", srch_dim, "search dimension (1 or 2)");
    cmd_search->add_option("--budget", srch_budget, "number of multi-starts");
    auto* seed_opt = cmd_search->add_option("--seed", srch_seed, "search seed");
    cmd_search->add_flag("--compare", srch_compare, "run 1D and 2D and report both");
    cmd_search->add_option("--out", srch_out, "candidate JSON path");

    // ---- hopt ----
    std::string hopt_delta = "0.2:0.9:0.1";
    std::string hopt_n = "1,5,20,50";
    std::string hopt_format = "csv";
    std::string hopt_out;
    auto* cmd_hopt = app.add_subcommand("hopt", "optimal stepsizes and the h_ir approximation");
    cmd_hopt->set_help_flag("--help", "print help");
    cmd_hopt->add_option("--delta", hopt_delta, "delta list (comma/range)");
    cmd_hopt->add_option("--n", hopt_n, "iteration counts (comma/range)");
    cmd_hopt->add_option("--format", hopt_format, "csv or json");
    cmd_hopt->add_option("--out", hopt_out, "output path (stdout if omitted)");

    // ---- hmax ----
    std::string hmax_grid = "0.01:0.99:0.01";
    std::string hmax_format = "csv";
    std::string hmax_out;
    auto* cmd_hmax = app.add_subcommand("hmax", "maximal-stepsize comparison with prior work");
    cmd_hmax->set_help_flag("--help", "print help");
    cmd_hmax->add_option("--delta-grid", hmax_grid, "delta grid min:max:step");
    cmd_hmax->add_option("--format", hmax_format, "csv or json");
    cmd_hmax->add_option("--out", hmax_out, "output path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_rates->parsed()) {
            sweep.deltas = parse_double_list(rates_delta);
            sweep.n_list = parse_int_list(rates_n);
            emit(igd::rates_table(sweep), rates_out);
            return 0;
        }
        if (cmd_certify->parsed()) {
            const auto outcome = igd::certify_report(parse_double_list(cert_delta), cert_grid,
                                                     cert_exact_grid, cert_format);
            emit(outcome.report, cert_out);
            if (outcome.failed > 0) {
                std::cerr << outcome.failed << " of " << outcome.total
                          << " certificates failed\n";
                return 1;
            }
            std::cerr << "all " << outcome.total << " certificates passed\n";
            return 0;
        }
        if (cmd_sim->parsed()) {
            igd::Instance inst = sim_instance == "quadratic"
                                     ? igd::make_quadratic(sim_L, sim_dim)
                                     : igd::make_huber(sim_delta, sim_h, sim_n, sim_L, sim_dim);
            igd::Oracle oracle = igd::oracle_exact();
            if (sim_oracle == "worst") {
                oracle = sim_instance == "quadratic"
                             ? igd::oracle_scaled(1.0 + sim_delta, sim_delta)
                             : igd::oracle_scaled(1.0 - sim_delta, sim_delta);
            } else if (sim_oracle == "exact") {
                oracle = igd::oracle_exact();
            } else if (sim_oracle.rfind("scaled:", 0) == 0) {
                oracle = igd::oracle_scaled(std::stod(sim_oracle.substr(7)), sim_delta);
            } else if (sim_oracle.rfind("orthogonal", 0) == 0) {
                const int orient = sim_oracle == "orthogonal:-" ? -1 : +1;
                oracle = igd::oracle_orthogonal(sim_delta, orient);
            } else {
                throw CLI::ValidationError("unknown oracle: " + sim_oracle);
            }
            const igd::Trace tr = igd::run(inst, oracle, sim_h, sim_delta, sim_n);
            const igd::Metrics m = igd::metrics(tr);
            std::cout << "{\"instance\":" << inst.descriptor_json()
                      << ",\"ratio_last\":" << igd::fmt_double(m.ratio_last)
                      << ",\"ratio_min\":" << igd::fmt_double(m.ratio_min)
                      << ",\"ratio_to_f1\":"
                      << (std::isfinite(m.ratio_to_f1) ? igd::fmt_double(m.ratio_to_f1)
                                                       : "null")
                      << ",\"degenerate\":" << (m.degenerate ? "true" : "false") << "}\n";
            if (!sim_out.empty()) {
                std::ostringstream os;
                os << "# config: simulate --instance " << sim_instance << " --oracle "
                   << sim_oracle << " --delta " << igd::fmt_double(sim_delta) << " --h "
                   << igd::fmt_double(sim_h) << " --n " << sim_n << " --L "
                   << igd::fmt_double(sim_L) << " --dim " << sim_dim << "\n";
                std::ostringstream body;
                igd::write_trace_csv(tr, body);
                os << body.str();
                igd::write_file_atomic(sim_out, os.str());
            }
            return 0;
        }
        if (cmd_search->parsed()) {
            if (seed_opt->count() == 0) {
                std::cerr << "note: --seed not given, using seed=0\n";
            }
            if (srch_h < 0.0) srch_h = igd::optimal_stepsize(srch_delta, 1).h_opt;
            const double ct = igd::rate_one_step_to_fstar(srch_h, srch_delta);
            const double c = igd::rate_one_step_to_f1(srch_h, srch_delta);
            const double reference = srch_criterion == "f1" ? c : ct;
            std::ostringstream os;
            if (srch_compare) {
                const auto cmp = igd::compare_1d_2d(srch_h, srch_delta, srch_budget, srch_seed);
                os << "{\"h\":" << igd::fmt_double(srch_h)
                   << ",\"delta\":" << igd::fmt_double(srch_delta)
                   << ",\"seed\":" << srch_seed << ",\"budget\":" << srch_budget
                   << ",\"reference\":" << igd::fmt_double(ct)
                   << ",\"best_1d\":" << igd::fmt_double(cmp.dim1.value)
                   << ",\"best_2d\":" << igd::fmt_double(cmp.dim2.value)
                   << ",\"candidate_1d\":" << igd::candidate_json(cmp.dim1.best)
                   << ",\"candidate_2d\":" << igd::candidate_json(cmp.dim2.best) << "}";
            } else {
                igd::SearchConfig cfg;
                cfg.h = srch_h;
                cfg.delta = srch_delta;
                cfg.criterion = srch_criterion == "f1" ? igd::PepCriterion::ToF1
                                                       : igd::PepCriterion::ToFstar;
                cfg.dimension = srch_dim;
                cfg.budget = srch_budget;
                cfg.seed = srch_seed;
                const auto res = igd::search_one_step(cfg);
                if (!res.found) {
                    std::cerr << "no feasible candidate found within budget\n";
                    return 2;
                }
                const auto diag = igd::orthogonality_diagnostic(res.best);
                os << "{\"h\":" << igd::fmt_double(srch_h)
                   << ",\"delta\":" << igd::fmt_double(srch_delta)
                   << ",\"seed\":" << srch_seed << ",\"budget\":" << srch_budget
                   << ",\"criterion\":\"" << igd::to_string(cfg.criterion) << "\""
                   << ",\"reference\":" << igd::fmt_double(reference)
                   << ",\"value\":" << igd::fmt_double(res.value)
                   << ",\"value_over_reference\":" << igd::fmt_double(res.value / reference)
                   << ",\"orthogonality\":";
                if (diag.defined) {
                    os << "{\"error_vs_gradient\":" << igd::fmt_double(diag.error_vs_gradient)
                       << ",\"error_vs_direction\":" << igd::fmt_double(diag.error_vs_direction)
                       << "}";
                } else {
                    os << "null";
                }
                os << ",\"candidate\":" << igd::candidate_json(res.best) << "}";
            }
            emit(os.str(), srch_out);
            return 0;
        }
        if (cmd_hopt->parsed()) {
            emit(igd::hopt_table(parse_double_list(hopt_delta), parse_int_list(hopt_n),
                                 hopt_format),
                 hopt_out);
            return 0;
        }
        if (cmd_hmax->parsed()) {
            const auto grid = parse_double_list(hmax_grid);
            double lo = grid.front(), hi = grid.back();
            double step = grid.size() > 1 ? grid[1] - grid[0] : 1.0;
            const auto outcome = igd::hmax_table(lo, hi, step, hmax_format);
            emit(outcome.report, hmax_out);
            if (!outcome.dominates) {
                std::cerr << "dominance check failed\n";
                return 1;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
