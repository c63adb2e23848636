#include "compscal/pipeline.hpp"

#include <cmath>
#include <sstream>

#include "compscal/errors.hpp"

namespace compscal {

namespace {

// Vacuum search with the exact closed forms where they apply.
VacuumSolution find_vacuum(const ModelParams& params, double sigma,
                           const Condensates& cond, const SingletPotential& pot,
                           const CubicCoefficients& cubic,
                           std::vector<std::string>* warnings) {
    if (sigma == 0.0 && params.f_pi_mode == FpiMode::Derived) {
        // Scale-free limit; the cubic factors exactly under the derived-f_pi
        // relation.
        VacuumSolution sol;
        sol.phi0 = vacuum_closed_form_sigma0(params);
        sol.all_real_roots = solve_cubic(cubic);
        const SingletPotential limit = sigma0_limit_potential(params);
        sol.curvature = potential_derivatives(limit, sol.phi0).second;
        sol.residual = std::abs(((sol.phi0 + cubic.a2) * sol.phi0 + cubic.a1) *
                                    sol.phi0 +
                                cubic.a0);
        sol.kind = VacuumKind::ClosedFormSigma0;
        return sol;
    }
    if (params.m_asym == 0.0 && sigma > 0.0) {
        // Odd cubic: roots are 0 and +-phi0 with phi0 = sqrt(mu2/lam).
        VacuumSolution sol;
        sol.phi0 = vacuum_closed_form_m0(params, sigma);
        sol.all_real_roots = {-sol.phi0, 0.0, sol.phi0};
        sol.curvature = potential_derivatives(pot, sol.phi0).second;
        sol.residual = std::abs(((sol.phi0 + cubic.a2) * sol.phi0 + cubic.a1) *
                                    sol.phi0 +
                                cubic.a0);
        sol.kind = VacuumKind::ClosedFormM0;
        return sol;
    }
    (void)cond;
    const std::vector<double> roots = solve_cubic(cubic);
    return select_vacuum(params, sigma, roots, pot, warnings);
}

} // namespace

PointReport run_point(const ModelParams& params, double sigma,
                      const PointOptions& opts) {
    PointReport report;
    report.params = params;
    report.sigma = sigma;
    try {
        const auto issues = validate_params(params);
        for (const auto& issue : issues)
            if (issue.informational) report.warnings.push_back(issue.message);
        if (!params_ok(issues)) {
            std::string joined = "invalid parameters:";
            for (const auto& issue : issues)
                if (!issue.informational) joined += " " + issue.message + ";";
            throw Error(ErrorCode::DomainError, joined);
        }
        report.mu = running_scale(params, sigma).mu;

        const Condensates cond =
            condensates_forward(params.n_c, params.lambda_cut, params.m_asym);
        const SingletPotential pot = singlet_potential(params, cond.c_q, sigma);
        const CubicCoefficients cubic =
            cubic_coefficients(params, cond.c_q, sigma);
        const VacuumSolution vac =
            find_vacuum(params, sigma, cond, pot, cubic, &report.warnings);

        SpectrumReport spec;
        spec.m_phi = scalar_mass(params, sigma, vac.phi0);
        spec.m_psi = quark_mass(vac.phi0);
        spec.z_phi = kinetic_constant(params, sigma, vac.phi0);
        const AxialShift axial =
            axial_mass_shift(params, sigma, spec.m_phi, opts.m_0A);
        spec.delta_mA2 = axial.delta_mA2;
        spec.m_A2 = opts.composite_a ? spec.m_phi * spec.m_phi : axial.m_A2;
        spec.delta_V = vector_coupling_shift(params, sigma);
        spec.width_ratio = width_coupling_ratio(params, sigma);
        if (sigma > 0.0) {
            const double oracle =
                scalar_mass_hessian_oracle(params, sigma, vac.phi0, pot);
            spec.hessian_residual = std::abs(spec.m_phi - oracle) / spec.m_phi;
        }

        report.condensates = cond;
        report.cubic = cubic;
        report.vacuum = vac;
        report.spectrum = spec;
    } catch (const Error& e) {
        report.condensates.reset();
        report.cubic.reset();
        report.vacuum.reset();
        report.spectrum.reset();
        report.status = e.token();
        report.error_message = e.what();
    }
    return report;
}

std::vector<double> grid_points(const GridSpec& grid) {
    if (grid.n < 2)
        throw Error(ErrorCode::Usage, "scan grid: need at least 2 points");
    if (!(grid.sigma_min >= 0.0))
        throw Error(ErrorCode::Usage, "scan grid: sigma_min must be >= 0");
    if (!(grid.sigma_max > grid.sigma_min))
        throw Error(ErrorCode::Usage, "scan grid: sigma_max must exceed sigma_min");
    if (grid.spacing == GridSpacing::Log && !(grid.sigma_min > 0.0))
        throw Error(ErrorCode::Usage, "scan grid: log spacing needs sigma_min > 0");

    std::vector<double> sigmas(grid.n);
    if (grid.spacing == GridSpacing::Linear) {
        const double step = (grid.sigma_max - grid.sigma_min) / (grid.n - 1);
        for (int i = 0; i < grid.n; ++i) sigmas[i] = grid.sigma_min + i * step;
    } else {
        const double ratio = std::log(grid.sigma_max / grid.sigma_min) / (grid.n - 1);
        for (int i = 0; i < grid.n; ++i)
            sigmas[i] = grid.sigma_min * std::exp(i * ratio);
    }
    sigmas.front() = grid.sigma_min;
    sigmas.back() = grid.sigma_max;
    return sigmas;
}

ScanTable run_scan(const ModelParams& params, const GridSpec& grid,
                   const PointOptions& opts) {
    ScanTable table;
    table.grid = grid;
    const std::vector<double> sigmas = grid_points(grid);
    table.rows.reserve(sigmas.size());
    for (double s : sigmas) table.rows.push_back(run_point(params, s, opts));

    // m_phi must fall as sigma grows; violations are findings, not errors.
    auto& diag = table.diagnostics;
    for (size_t i = 1; i < table.rows.size(); ++i) {
        const auto& prev = table.rows[i - 1];
        const auto& cur = table.rows[i];
        if (!prev.ok() || !cur.ok()) continue;
        if (!(cur.spectrum->m_phi < prev.spectrum->m_phi)) {
            diag.m_phi_monotone_decreasing = false;
            std::ostringstream os;
            os << "m_phi not strictly decreasing between sigma = " << prev.sigma
               << " (m_phi = " << prev.spectrum->m_phi << ") and sigma = "
               << cur.sigma << " (m_phi = " << cur.spectrum->m_phi << ")";
            diag.monotonicity_findings.push_back(os.str());
        }
    }

    // Branch-continuity heuristic: a root-branch switch shows up as one
    // interval whose phi0 step dwarfs the secant steps on both sides.
    for (size_t i = 1; i + 2 < table.rows.size(); ++i) {
        const auto& a = table.rows[i - 1];
        const auto& b = table.rows[i];
        const auto& c = table.rows[i + 1];
        const auto& d = table.rows[i + 2];
        if (!a.ok() || !b.ok() || !c.ok() || !d.ok()) continue;
        const double before = std::abs(b.vacuum->phi0 - a.vacuum->phi0);
        const double here = std::abs(c.vacuum->phi0 - b.vacuum->phi0);
        const double after = std::abs(d.vacuum->phi0 - c.vacuum->phi0);
        const double floor = 1e-9 * std::max(1.0, std::abs(b.vacuum->phi0));
        if (here > 5.0 * std::max(before, after) + floor) {
            diag.phi0_continuous = false;
            std::ostringstream os;
            os << "phi0 jump between sigma = " << b.sigma << " and " << c.sigma
               << " is far above the neighbouring secant slope "
               << "(possible root-branch switch)";
            diag.continuity_findings.push_back(os.str());
        }
    }
    return table;
}

} // namespace compscal
