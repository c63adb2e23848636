#include "compscal/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "compscal/condensates.hpp"
#include "compscal/errors.hpp"
#include "compscal/pipeline.hpp"
#include "compscal/potential.hpp"
#include "compscal/spectrum.hpp"
#include "compscal/vacuum.hpp"

namespace compscal {

namespace {

constexpr double kSigmaProbes[] = {0.01, 0.1, 0.5, 1.0, 2.0};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

struct Suite {
    std::vector<CheckResult> results;
    std::vector<ModelParams> combos;

    void record(const std::string& name, bool passed, const std::string& detail,
                bool informational = false) {
        results.push_back({name, passed, informational, detail});
    }
};

void check_xi(Suite& s) {
    // Identity n sigma xi_n = 1 - e^{-n sigma} on a log grid. The reference
    // side is evaluated with expm1 so it is itself accurate near sigma = 0.
    double worst = 0.0;
    for (int i = 0; i <= 80; ++i) {
        const double sigma = 1e-8 * std::pow(50.0 / 1e-8, i / 80.0);
        for (int n = 1; n <= 3; ++n) {
            const double lhs = n * sigma * xi_factor(n, sigma);
            const double rhs = -std::expm1(-n * sigma);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
    }
    s.record("xi_identity", worst < 1e-14, "worst relative " + fmt(worst));

    bool ordered = true;
    bool decreasing = true;
    double prev[4] = {0, 2, 2, 2};
    for (int i = 0; i <= 60; ++i) {
        const double sigma = 1e-4 * std::pow(50.0 / 1e-4, i / 60.0);
        const XiFactors xi = xi_factors(sigma);
        ordered = ordered && 0.0 < xi.xi3 && xi.xi3 < xi.xi2 && xi.xi2 < xi.xi1 &&
                  xi.xi1 <= 1.0;
        decreasing = decreasing && xi.xi1 < prev[1] && xi.xi2 < prev[2] &&
                     xi.xi3 < prev[3];
        prev[1] = xi.xi1;
        prev[2] = xi.xi2;
        prev[3] = xi.xi3;
    }
    s.record("xi_bounds_and_monotonicity", ordered && decreasing,
             ordered ? (decreasing ? "0 < xi3 < xi2 < xi1 <= 1, all decreasing"
                                   : "monotonicity broken")
                     : "ordering broken");

    double worst_gap = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const double at = 1e-6 / n;  // series threshold in sigma for this n
        const double gap =
            std::abs(xi_factor(n, at * (1.0 - 1e-9)) - xi_factor(n, at * (1.0 + 1e-9)));
        worst_gap = std::max(worst_gap, gap);
    }
    s.record("xi_series_crossover", worst_gap < 1e-12,
             "worst branch gap " + fmt(worst_gap));
}

void check_fpi(Suite& s) {
    double worst = 0.0;
    for (const ModelParams& p : s.combos) {
        const double f = derive_fpi(p.n_c, p.lambda_cut, p.m_asym);
        const double lhs = f * f * 4.0 * pi_sq / p.n_c + p.m_asym * p.m_asym;
        worst = std::max(
            worst, std::abs(lhs - p.lambda_cut * p.lambda_cut) /
                       (p.lambda_cut * p.lambda_cut));
    }
    s.record("fpi_consistency_identity", worst < 1e-14,
             "worst relative " + fmt(worst));
}

void check_condensates(Suite& s) {
    bool odd = true;
    double worst_jac = 0.0;
    double worst_rt = 0.0;
    for (const ModelParams& p : s.combos) {
        const Condensates plus = condensates_forward(p.n_c, p.lambda_cut, p.m_asym);
        const Condensates minus =
            condensates_forward(p.n_c, p.lambda_cut, -p.m_asym);
        odd = odd && (minus.c_q == -plus.c_q);

        // Analytic Jacobian against central differences.
        const double h = 1e-6 * p.lambda_cut;
        const Jacobian2 jac = forward_jacobian(p.n_c, p.lambda_cut, p.m_asym);
        const Condensates lp = condensates_forward(p.n_c, p.lambda_cut + h, p.m_asym);
        const Condensates lm = condensates_forward(p.n_c, p.lambda_cut - h, p.m_asym);
        const Condensates mp = condensates_forward(p.n_c, p.lambda_cut, p.m_asym + h);
        const Condensates mm = condensates_forward(p.n_c, p.lambda_cut, p.m_asym - h);
        const double fd[2][2] = {
            {(lp.c_q - lm.c_q) / (2 * h), (mp.c_q - mm.c_q) / (2 * h)},
            {(lp.c_g - lm.c_g) / (2 * h), (mp.c_g - mm.c_g) / (2 * h)}};
        double scale = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                scale = std::max(scale, std::abs(jac[i][j]));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                worst_jac =
                    std::max(worst_jac, std::abs(jac[i][j] - fd[i][j]) / scale);

        // Round trip through the inverse.
        const auto [l, m] = condensates_invert(p.n_c, plus);
        worst_rt = std::max(worst_rt,
                            std::abs(l - p.lambda_cut) / p.lambda_cut);
        if (p.m_asym > 0.0)
            worst_rt = std::max(worst_rt, std::abs(m - p.m_asym) / p.m_asym);
        else
            worst_rt = std::max(worst_rt, std::abs(m));
    }
    s.record("cq_odd_in_m_asym", odd, odd ? "bitwise" : "sign structure broken");
    s.record("jacobian_vs_finite_difference", worst_jac < 1e-6,
             "worst relative " + fmt(worst_jac));
    s.record("condensate_round_trip", worst_rt < 1e-8,
             "worst deviation " + fmt(worst_rt));
}

void check_potential(Suite& s) {
    double worst_d1 = 0.0, worst_d2 = 0.0, worst_id = 0.0;
    std::mt19937 rng(12345);
    for (const ModelParams& p : s.combos) {
        const double c_q =
            condensates_forward(p.n_c, p.lambda_cut, p.m_asym).c_q;
        for (double sigma : kSigmaProbes) {
            const SingletPotential pot = singlet_potential(p, c_q, sigma);
            for (double scale : {0.5, 1.0, 2.0}) {
                const double x = scale * p.lambda_cut;
                const double h = 1e-5 * x;
                const PotentialDerivs d = potential_derivatives(pot, x);
                const double fd1 = (potential_value(pot, x + h) -
                                    potential_value(pot, x - h)) /
                                   (2 * h);
                // Second differences lose ~h^-2 digits to rounding, and U''
                // crosses zero inside the probed range, so a plain 3-point
                // quotient cannot certify 1e-6 there.  The 5-point central
                // stencil is exact for quartic U (no truncation term), which
                // frees the step to be chosen against rounding instead; the
                // error is conditioned on the magnitudes of the terms that
                // cancel, not on the (possibly vanishing) result.
                const double h2 = 1e-3 * x;
                const double fd2 = (-potential_value(pot, x + 2 * h2) +
                                    16 * potential_value(pot, x + h2) -
                                    30 * potential_value(pot, x) +
                                    16 * potential_value(pot, x - h2) -
                                    potential_value(pot, x - 2 * h2)) /
                                   (12 * h2 * h2);
                const double terms2 = 4.0 * std::abs(pot.coeffs.mu2) +
                                      12.0 * pot.coeffs.lam * x * x +
                                      12.0 * std::abs(pot.coeffs.c_cub) * x;
                const double floor = 1e-9 * std::max(1.0, std::abs(
                                                              potential_value(pot, x)));
                worst_d1 = std::max(worst_d1,
                                    std::abs(d.first - fd1) /
                                        std::max({std::abs(d.first),
                                                  std::abs(fd1), floor}));
                worst_d2 = std::max(worst_d2,
                                    std::abs(d.second - fd2) /
                                        std::max(terms2, floor));
            }
            // U'(s) = 4 lam (s^3 + a2 s^2 + a1 s + a0), coefficient identity
            // probed at random abscissae.
            const CubicCoefficients c = cubic_coefficients(p, c_q, sigma);
            std::uniform_real_distribution<double> dist(0.1 * p.lambda_cut,
                                                        3.0 * p.lambda_cut);
            for (int k = 0; k < 10; ++k) {
                const double x = dist(rng);
                const double lhs = potential_derivatives(pot, x).first;
                const double rhs = 4.0 * pot.coeffs.lam *
                                   (((x + c.a2) * x + c.a1) * x + c.a0);
                worst_id = std::max(worst_id,
                                    std::abs(lhs - rhs) /
                                        std::max({std::abs(lhs), std::abs(rhs),
                                                  1e-300}));
            }
        }
    }
    s.record("derivatives_vs_finite_difference",
             worst_d1 < 1e-6 && worst_d2 < 1e-6,
             "worst relative U' " + fmt(worst_d1) + ", U'' " + fmt(worst_d2));
    s.record("stationarity_cubic_identity", worst_id < 1e-12,
             "worst relative " + fmt(worst_id));
}

void check_vacuum(Suite& s, bool derived_mode) {
    double worst_res = 0.0;
    double worst_oracle = 0.0;
    double worst_m0 = 0.0;
    double worst_s0_num = 0.0;
    double worst_s0_exact = 0.0;
    bool curvature_pos = true;
    for (const ModelParams& p : s.combos) {
        const double c_q =
            condensates_forward(p.n_c, p.lambda_cut, p.m_asym).c_q;
        for (double sigma : kSigmaProbes) {
            const SingletPotential pot = singlet_potential(p, c_q, sigma);
            const CubicCoefficients c = cubic_coefficients(p, c_q, sigma);
            const VacuumSolution sol =
                select_vacuum(p, sigma, solve_cubic(c), pot);
            curvature_pos = curvature_pos && sol.curvature > 0.0;
            const double scale = std::max(1.0, sol.phi0);
            worst_res = std::max(worst_res,
                                 sol.residual / (scale * scale * scale));
            const double oracle =
                vacuum_oracle_grid(pot, 3.0 * p.lambda_cut, 200000);
            worst_oracle = std::max(worst_oracle,
                                    std::abs(sol.phi0 - oracle) / sol.phi0);
            if (p.m_asym == 0.0) {
                const double closed = vacuum_closed_form_m0(p, sigma);
                worst_m0 = std::max(worst_m0,
                                    std::abs(sol.phi0 - closed) / closed);
            }
        }
        if (derived_mode) {
            // sigma -> 0: the numerical branch at sigma = 1e-6 approaches the
            // closed form; the sigma = 0 limit path lands on it exactly.
            const double closed = vacuum_closed_form_sigma0(p);
            const PointReport near = run_point(p, 1e-6);
            if (near.ok())
                worst_s0_num = std::max(worst_s0_num,
                                        std::abs(near.vacuum->phi0 - closed) /
                                            closed);
            const PointReport at = run_point(p, 0.0);
            if (at.ok())
                worst_s0_exact = std::max(worst_s0_exact,
                                          std::abs(at.vacuum->phi0 - closed) /
                                              closed);
            if (!near.ok() || !at.ok()) worst_s0_num = 1.0;
        }
    }
    s.record("vacuum_residual_and_stability",
             worst_res < 1e-10 && curvature_pos,
             "worst scaled residual " + fmt(worst_res));
    s.record("vacuum_vs_grid_oracle", worst_oracle < 1e-8,
             "worst relative " + fmt(worst_oracle));
    s.record("m0_closed_form_agreement", worst_m0 < 1e-12,
             "worst relative " + fmt(worst_m0));
    if (derived_mode) {
        s.record("sigma0_limit_convergence", worst_s0_num < 1e-6,
                 "worst relative at sigma = 1e-6: " + fmt(worst_s0_num));
        s.record("sigma0_exact_path", worst_s0_exact < 1e-12,
                 "worst relative " + fmt(worst_s0_exact));
    }
}

void check_spectrum(Suite& s, bool derived_mode) {
    double worst_hessian = 0.0;
    double worst_axial = 0.0;
    bool shift_exact = true;
    bool kinetic_ok = true;
    for (const ModelParams& p : s.combos) {
        for (double sigma : kSigmaProbes) {
            const PointReport r = run_point(p, sigma);
            if (!r.ok()) {
                worst_hessian = worst_axial = 1.0;
                continue;
            }
            worst_hessian =
                std::max(worst_hessian, r.spectrum->hessian_residual.value_or(1.0));
            worst_axial = std::max(
                worst_axial, axial_quadratic_check(p, sigma, r.vacuum->phi0));
            const double lam = quartic_coupling(p.n_c, sigma);
            const double dv = vector_coupling_shift(p, sigma);
            shift_exact = shift_exact && dv == lam / 3.0 &&
                          r.spectrum->delta_mA2 ==
                              dv * r.spectrum->m_phi * r.spectrum->m_phi;
            kinetic_ok = kinetic_ok && r.spectrum->z_phi > 0.0;
        }
        const PointReport r0 = run_point(p, 0.0);
        if (r0.ok()) {
            kinetic_ok = kinetic_ok && r0.spectrum->z_phi == 0.0;
            shift_exact = shift_exact && r0.spectrum->delta_mA2 == 0.0;
        } else if (derived_mode) {
            kinetic_ok = false;
        }
    }
    s.record("hessian_oracle_agreement", derived_mode ? worst_hessian < 1e-6 : true,
             "worst relative " + fmt(worst_hessian), !derived_mode);
    s.record("axial_quadratic_identity", derived_mode ? worst_axial < 1e-10 : true,
             "worst relative " + fmt(worst_axial), !derived_mode);
    s.record("axial_vector_shift_exact", shift_exact,
             shift_exact ? "delta_V = lam/3 and delta_mA2 = delta_V m_phi^2, "
                           "bitwise; both vanish at sigma = 0"
                         : "bitwise identity broken");
    s.record("kinetic_positivity", kinetic_ok,
             kinetic_ok ? "z_phi > 0 for sigma > 0 and exactly 0 at sigma = 0"
                        : "kinetic constant sign broken");
}

void check_scan(Suite& s, bool derived_mode) {
    bool monotone = true;
    bool continuous = true;
    double worst_peak = 0.0;
    std::string first_finding;
    for (const ModelParams& p : s.combos) {
        GridSpec grid;
        grid.sigma_min = 0.0;
        grid.sigma_max = 2.0;
        grid.n = 21;
        const ScanTable table = run_scan(p, grid);
        if (!table.diagnostics.m_phi_monotone_decreasing) {
            monotone = false;
            if (first_finding.empty())
                first_finding = table.diagnostics.monotonicity_findings.front();
        }
        continuous = continuous && table.diagnostics.phi0_continuous;
        if (derived_mode && table.rows.front().ok()) {
            // the sigma = 0 row carries the maximal mass 2 (phi0 + m_asym)
            const auto& row = table.rows.front();
            const double expected = 2.0 * (row.vacuum->phi0 + p.m_asym);
            worst_peak = std::max(worst_peak,
                                  std::abs(row.spectrum->m_phi - expected) /
                                      expected);
        }
    }
    // The falling-mass claim is asserted without proof; counterexamples are
    // findings, never suite failures.
    s.record("m_phi_monotone_decreasing_scan", monotone,
             monotone ? "strictly decreasing on all 21-point scans"
                      : "counterexample: " + first_finding,
             true);
    s.record("phi0_branch_continuity", continuous,
             continuous ? "no branch switches detected" : "branch switch detected");
    if (derived_mode)
        s.record("m_phi_peak_at_sigma0", worst_peak < 1e-12,
                 "worst relative deviation from 2 (phi0 + m_asym): " +
                     fmt(worst_peak));
}

} // namespace

std::vector<CheckResult> run_validation(const std::optional<ModelParams>& params) {
    Suite s;
    bool derived_mode = true;
    if (params) {
        s.combos.push_back(*params);
        derived_mode = params->f_pi_mode == FpiMode::Derived;
    } else {
        for (double l : {0.5, 1.0, 2.0})
            for (double ratio : {0.0, 0.1, 0.3, 0.5})
                s.combos.push_back(derived_params(3, l, ratio * l));
    }

    check_xi(s);
    check_fpi(s);
    check_condensates(s);
    check_potential(s);
    check_vacuum(s, derived_mode);
    check_spectrum(s, derived_mode);
    check_scan(s, derived_mode);
    return s.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.informational && !r.passed) return false;
    return true;
}

} // namespace compscal
