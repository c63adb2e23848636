#include "compscal/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "compscal/errors.hpp"
#include "compscal/pipeline.hpp"
#include "compscal/report_io.hpp"
#include "compscal/validation.hpp"

namespace compscal {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct ParamArgs {
    int nc = 3;
    double lambda = 1.0;
    double m = 0.0;
    double fpi = 0.0;
    std::string config;
    CLI::Option* nc_opt = nullptr;
    CLI::Option* lambda_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* fpi_opt = nullptr;
    bool fpi_set = false;  // flag or config supplied an override f_pi
};

void add_param_flags(CLI::App* sub, ParamArgs& a, bool with_config = true) {
    a.nc_opt = sub->add_option("--nc", a.nc, "number of colors (default 3)");
    a.lambda_opt =
        sub->add_option("--lambda", a.lambda, "compositeness scale [GeV]");
    a.m_opt = sub->add_option("--m", a.m, "spectral asymmetry [GeV]");
    a.fpi_opt = sub->add_option(
        "--fpi", a.fpi,
        "pion decay constant [GeV]; supplying it switches f_pi to override "
        "mode (default: derived from --nc/--lambda/--m)");
    if (with_config)
        sub->add_option("--config", a.config,
                        "flat JSON file with keys nc, lambda, m, fpi, sigma, "
                        "m0a, composite_a; flags take precedence");
}

nlohmann::json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Usage, "config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Usage,
                    "config: '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object())
        throw Error(ErrorCode::Usage, "config: top level must be a JSON object");
    return j;
}

template <typename T>
void config_fill(const nlohmann::json& cfg, const char* key,
                 const CLI::Option* opt, T& target, bool* provided = nullptr) {
    if (opt != nullptr && opt->count() > 0) return;  // flags win
    const auto it = cfg.find(key);
    if (it == cfg.end()) return;
    try {
        target = it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(ErrorCode::Usage,
                    std::string("config: key '") + key + "' has the wrong type");
    }
    if (provided) *provided = true;
}

// Applies the config file (if any) to the shared parameter args plus the
// per-command extras, respecting flag precedence.
void merge_config(ParamArgs& a, double* sigma = nullptr,
                  const CLI::Option* sigma_opt = nullptr, double* m0a = nullptr,
                  const CLI::Option* m0a_opt = nullptr,
                  bool* composite_a = nullptr,
                  const CLI::Option* composite_opt = nullptr) {
    a.fpi_set = a.fpi_opt != nullptr && a.fpi_opt->count() > 0;
    if (a.config.empty()) return;
    const nlohmann::json cfg = load_config(a.config);
    config_fill(cfg, "nc", a.nc_opt, a.nc);
    config_fill(cfg, "lambda", a.lambda_opt, a.lambda);
    config_fill(cfg, "m", a.m_opt, a.m);
    bool fpi_from_config = false;
    config_fill(cfg, "fpi", a.fpi_opt, a.fpi, &fpi_from_config);
    a.fpi_set = a.fpi_set || fpi_from_config;
    if (sigma) config_fill(cfg, "sigma", sigma_opt, *sigma);
    if (m0a) config_fill(cfg, "m0a", m0a_opt, *m0a);
    if (composite_a) config_fill(cfg, "composite_a", composite_opt, *composite_a);
}

// Derived-mode construction fails for m_asym >= lambda_cut because f_pi^2
// would be negative. At the compositeness scale the model is f_pi-free and
// the sharper statement is the missing vacuum, so rephrase when it applies.
ModelParams build_params(const ParamArgs& a,
                         std::optional<double> sigma_for_diag = {}) {
    if (a.fpi_set) return override_params(a.nc, a.lambda, a.m, a.fpi);
    try {
        return derived_params(a.nc, a.lambda, a.m);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DomainError && sigma_for_diag &&
            *sigma_for_diag == 0.0 &&
            a.m >= std::numbers::sqrt3 * a.lambda)
            throw Error(ErrorCode::NoVacuum,
                        "no positive vacuum at the compositeness scale: "
                        "m_asym >= sqrt(3) lambda_cut");
        throw;
    }
}

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::CSV;
    if (name == "json") return ReportFormat::JSON;
    throw Error(ErrorCode::Usage, "unknown format '" + name + "'");
}

void require_sigma(double sigma) {
    if (std::isnan(sigma))
        throw Error(ErrorCode::Usage,
                    "sigma is required (pass --sigma or a config file)");
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::Usage, "sigma must be >= 0");
}

void write_text(const std::string& text, const std::string& destination) {
    if (destination.empty() || destination == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(destination);
    if (!out)
        throw Error(ErrorCode::IoError,
                    "cannot open '" + destination + "' for writing");
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write failed");
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{
        "compscal: composite-scalar effective-potential solver.\n"
        "Maps vacuum condensates to model parameters, finds the scalar\n"
        "vacuum, and reports the meson spectrum as a function of the\n"
        "running scale. All dimensional quantities are in GeV powers."};
    app.require_subcommand(1);
    int exit_code = 0;

    // -------- solve --------
    auto* solve = app.add_subcommand("solve", "evaluate a single (params, sigma) point");
    ParamArgs solve_params;
    add_param_flags(solve, solve_params);
    double solve_sigma = kUnset;
    double solve_m0a = 0.0;
    bool solve_composite = false;
    std::string solve_format = "json";
    std::string solve_out;
    auto* solve_sigma_opt =
        solve->add_option("--sigma", solve_sigma, "running distance, >= 0");
    auto* solve_m0a_opt =
        solve->add_option("--m0a", solve_m0a, "elementary axial bare mass [GeV]");
    auto* solve_composite_opt = solve->add_flag(
        "--composite-a", solve_composite,
        "equal-scale composite axial mode: report m_A^2 = m_phi^2");
    solve->add_option("--format", solve_format, "output format (default json)")
        ->check(CLI::IsMember({"csv", "json"}));
    solve->add_option("--out", solve_out, "output path (default stdout)");
    solve->callback([&] {
        merge_config(solve_params, &solve_sigma, solve_sigma_opt, &solve_m0a,
                     solve_m0a_opt, &solve_composite, solve_composite_opt);
        require_sigma(solve_sigma);
        const ModelParams params = build_params(solve_params, solve_sigma);
        PointOptions opts;
        opts.m_0A = solve_m0a;
        opts.composite_a = solve_composite;
        const PointReport report = run_point(params, solve_sigma, opts);
        emit_point(report, parse_format(solve_format), solve_out);
        if (!report.ok()) {
            std::cerr << "error [" << report.status << "]: "
                      << report.error_message << "\n";
            exit_code = 2;
        }
    });

    // -------- scan --------
    auto* scan = app.add_subcommand("scan", "evaluate a sigma grid");
    ParamArgs scan_params;
    add_param_flags(scan, scan_params);
    GridSpec scan_grid;
    double scan_m0a = 0.0;
    bool scan_composite = false;
    bool scan_log = false;
    std::string scan_format = "csv";
    std::string scan_out;
    scan->add_option("--sigma-min", scan_grid.sigma_min,
                     "grid start (default 0)");
    scan->add_option("--sigma-max", scan_grid.sigma_max, "grid end (default 2)");
    scan->add_option("--n", scan_grid.n, "number of grid points (default 21)");
    scan->add_flag("--log", scan_log, "logarithmic spacing (needs sigma-min > 0)");
    auto* scan_m0a_opt =
        scan->add_option("--m0a", scan_m0a, "elementary axial bare mass [GeV]");
    auto* scan_composite_opt = scan->add_flag(
        "--composite-a", scan_composite,
        "equal-scale composite axial mode: report m_A^2 = m_phi^2");
    scan->add_option("--format", scan_format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--out", scan_out, "output path (default stdout)");
    scan->callback([&] {
        merge_config(scan_params, nullptr, nullptr, &scan_m0a, scan_m0a_opt,
                     &scan_composite, scan_composite_opt);
        scan_grid.spacing = scan_log ? GridSpacing::Log : GridSpacing::Linear;
        const ModelParams params =
            build_params(scan_params, scan_grid.sigma_min);
        PointOptions opts;
        opts.m_0A = scan_m0a;
        opts.composite_a = scan_composite;
        const ScanTable table = run_scan(params, scan_grid, opts);
        emit_report(table, parse_format(scan_format), scan_out);
        for (const auto& finding : table.diagnostics.monotonicity_findings)
            std::cerr << "finding: " << finding << "\n";
        for (const auto& finding : table.diagnostics.continuity_findings)
            std::cerr << "finding: " << finding << "\n";
    });

    // -------- condensates --------
    auto* cond = app.add_subcommand(
        "condensates", "condensate map: (lambda_cut, m_asym) <-> (c_q, c_g)");
    cond->require_subcommand(1);

    auto* fwd = cond->add_subcommand("forward", "condensates from (lambda_cut, m_asym)");
    ParamArgs fwd_params;
    add_param_flags(fwd, fwd_params, /*with_config=*/false);
    std::string fwd_out;
    fwd->add_option("--out", fwd_out, "output path (default stdout)");
    fwd->callback([&] {
        const Condensates c =
            condensates_forward(fwd_params.nc, fwd_params.lambda, fwd_params.m);
        nlohmann::ordered_json j{{"c_q", c.c_q}, {"c_g", c.c_g}};
        write_text(j.dump(2) + "\n", fwd_out);
    });

    auto* inv = cond->add_subcommand("invert",
                                     "recover (lambda_cut, m_asym) from condensates");
    int inv_nc = 3;
    double inv_cq = 0.0, inv_cg = 0.0;
    double inv_guess_lambda = kUnset, inv_guess_m = kUnset;
    std::string inv_out;
    inv->add_option("--nc", inv_nc, "number of colors (default 3)");
    inv->add_option("--cq", inv_cq, "quark condensate [GeV^3]")->required();
    inv->add_option("--cg", inv_cg, "gluon condensate [GeV^4]")->required();
    inv->add_option("--guess-lambda", inv_guess_lambda,
                    "optional Newton start for lambda_cut");
    inv->add_option("--guess-m", inv_guess_m, "optional Newton start for m_asym");
    inv->add_option("--out", inv_out, "output path (default stdout)");
    inv->callback([&] {
        std::optional<std::pair<double, double>> guess;
        if (!std::isnan(inv_guess_lambda) || !std::isnan(inv_guess_m)) {
            if (std::isnan(inv_guess_lambda) || std::isnan(inv_guess_m))
                throw Error(ErrorCode::Usage,
                            "--guess-lambda and --guess-m must be given together");
            guess = {{inv_guess_lambda, inv_guess_m}};
        }
        const auto [l, m] = condensates_invert(inv_nc, {inv_cq, inv_cg}, guess);
        const Condensates check = condensates_forward(inv_nc, l, m);
        nlohmann::ordered_json j{{"lambda_cut", l},
                                 {"m_asym", m},
                                 {"residual_c_q", check.c_q - inv_cq},
                                 {"residual_c_g", check.c_g - inv_cg}};
        write_text(j.dump(2) + "\n", inv_out);
    });

    // -------- validate --------
    auto* validate = app.add_subcommand(
        "validate",
        "run the cross-module invariant suite (standard parameter grid, or "
        "the given parameters)");
    ParamArgs val_params;
    add_param_flags(validate, val_params);
    std::string val_out;
    validate->add_option("--out", val_out, "output path (default stdout)");
    validate->callback([&] {
        merge_config(val_params);
        std::optional<ModelParams> target;
        const bool any_given =
            val_params.nc_opt->count() > 0 || val_params.lambda_opt->count() > 0 ||
            val_params.m_opt->count() > 0 || val_params.fpi_set ||
            !val_params.config.empty();
        if (any_given) target = build_params(val_params);
        const auto results = run_validation(target);
        std::string text;
        for (const CheckResult& r : results) {
            const char* tag = r.informational ? (r.passed ? "info " : "FINDING")
                                              : (r.passed ? "PASS " : "FAIL ");
            text += std::string("[") + tag + "] " + r.name + ": " + r.detail + "\n";
        }
        const bool ok = all_passed(results);
        text += ok ? "validation passed\n" : "validation FAILED\n";
        write_text(text, val_out);
        if (!ok) exit_code = 2;
    });

    // -------- oracle --------
    auto* oracle = app.add_subcommand(
        "oracle", "brute-force vacuum via grid scan + golden-section refinement");
    ParamArgs oracle_params;
    add_param_flags(oracle, oracle_params);
    double oracle_sigma = kUnset;
    double oracle_smax = 0.0;
    int oracle_npoints = 1000000;
    std::string oracle_out;
    auto* oracle_sigma_opt =
        oracle->add_option("--sigma", oracle_sigma, "running distance, >= 0");
    oracle->add_option("--smax", oracle_smax,
                       "scan range upper end (default 3 lambda_cut)");
    oracle->add_option("--npoints", oracle_npoints,
                       "grid points, >= 1000 (default 1000000)");
    oracle->add_option("--out", oracle_out, "output path (default stdout)");
    oracle->callback([&] {
        merge_config(oracle_params, &oracle_sigma, oracle_sigma_opt);
        require_sigma(oracle_sigma);
        const ModelParams params = build_params(oracle_params, oracle_sigma);
        const double c_q =
            condensates_forward(params.n_c, params.lambda_cut, params.m_asym).c_q;
        // At sigma = 0 the potential degenerates; scan its scale-free limit.
        const SingletPotential pot =
            oracle_sigma > 0.0 ? singlet_potential(params, c_q, oracle_sigma)
                               : sigma0_limit_potential(params);
        const double smax =
            oracle_smax > 0.0 ? oracle_smax : 3.0 * params.lambda_cut;
        const double phi0 = vacuum_oracle_grid(pot, smax, oracle_npoints);
        nlohmann::ordered_json j{{"phi0", phi0},
                                 {"sigma", oracle_sigma},
                                 {"s_max", smax},
                                 {"n_points", oracle_npoints}};
        write_text(j.dump(2) + "\n", oracle_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error [" << e.token() << "]: " << e.what() << "\n";
        return e.code() == ErrorCode::Usage ? 1 : 2;
    }
    return exit_code;
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& s : args) argv.push_back(s.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

} // namespace compscal
