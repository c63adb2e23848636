#include "compscal/vacuum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "compscal/condensates.hpp"
#include "compscal/errors.hpp"

namespace compscal {

CubicCoefficients cubic_coefficients(const ModelParams& params, double c_q,
                                     double sigma) {
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError, "cubic_coefficients: sigma must be >= 0");
    const XiFactors xi = xi_factors(sigma);
    CubicCoefficients c;
    c.a2 = 3.0 * params.m_asym * xi.xi1;
    c.a1 = -12.0 * pi_sq * params.f_pi * params.f_pi * xi.xi2 / params.n_c;
    c.a0 = 6.0 * pi_sq * c_q * xi.xi3 / params.n_c;
    return c;
}

namespace {

double cubic_value(const CubicCoefficients& c, double x) {
    return ((x + c.a2) * x + c.a1) * x + c.a0;
}

double cubic_slope(const CubicCoefficients& c, double x) {
    return (3.0 * x + 2.0 * c.a2) * x + c.a1;
}

// Guarded Newton polish: accept a step only while |cubic| decreases.
double polish_root(const CubicCoefficients& c, double x) {
    double f = std::abs(cubic_value(c, x));
    for (int i = 0; i < 2; ++i) {
        const double slope = cubic_slope(c, x);
        if (slope == 0.0 || !std::isfinite(slope)) break;
        const double xn = x - cubic_value(c, x) / slope;
        const double fn = std::abs(cubic_value(c, xn));
        if (!(fn < f)) break;
        x = xn;
        f = fn;
    }
    return x;
}

} // namespace

std::vector<double> solve_cubic(const CubicCoefficients& c) {
    if (!std::isfinite(c.a2) || !std::isfinite(c.a1) || !std::isfinite(c.a0))
        throw Error(ErrorCode::DomainError, "solve_cubic: coefficients not finite");

    // Depress: x = t - a2/3 gives t^3 + p t + q = 0.
    const double shift = c.a2 / 3.0;
    const double p = c.a1 - c.a2 * shift;
    const double q = c.a0 - shift * (c.a1 - 2.0 * shift * shift);
    const double disc = 0.25 * q * q + p * p * p / 27.0;

    std::vector<double> roots;
    if (disc <= 0.0) {
        // Three real roots (possibly degenerate): trigonometric form. The
        // clamp absorbs rounding when disc sits on the boundary.
        if (p == 0.0) {
            roots.assign(3, -shift);  // triple root
        } else {
            const double r = 2.0 * std::sqrt(-p / 3.0);
            double cosarg = 3.0 * q / (p * r);
            cosarg = std::clamp(cosarg, -1.0, 1.0);
            const double theta = std::acos(cosarg);
            for (int k = 0; k < 3; ++k) {
                const double t =
                    r * std::cos((theta - 2.0 * std::numbers::pi * k) / 3.0);
                roots.push_back(t - shift);
            }
        }
    } else {
        // One real root. Pick the Cardano branch where the terms add instead
        // of cancel, then recover the partner factor as -p/(3u).
        const double s = std::sqrt(disc);
        const double u = (q <= 0.0) ? std::cbrt(-0.5 * q + s)
                                    : std::cbrt(-0.5 * q - s);
        const double t = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
        roots.push_back(t - shift);
    }

    for (double& x : roots) x = polish_root(c, x);
    std::sort(roots.begin(), roots.end());
    return roots;
}

SingletPotential sigma0_limit_potential(const ModelParams& params) {
    const double c_q =
        condensates_forward(params.n_c, params.lambda_cut, params.m_asym).c_q;
    const CubicCoefficients c = cubic_coefficients(params, c_q, 0.0);
    SingletPotential pot;
    // Map 0.25 s^4 + (a2/3) s^3 + (a1/2) s^2 + a0 s onto the
    // -2 mu2 s^2 + lam s^4 + 2 c_lin s + 2 c_cub s^3 evaluation form.
    pot.coeffs.lam = 0.25;
    pot.coeffs.c_cub = c.a2 / 6.0;
    pot.coeffs.mu2 = -c.a1 / 4.0;
    pot.coeffs.c_lin = c.a0 / 2.0;
    pot.coeffs.sigma = 0.0;
    pot.flavor_trace = 2;
    return pot;
}

VacuumSolution select_vacuum(const ModelParams& params, double sigma,
                             const std::vector<double>& roots,
                             const SingletPotential& pot,
                             std::vector<std::string>* warnings) {
    (void)sigma;  // carried for the interface; the ranking uses pot directly
    if (roots.empty())
        throw Error(ErrorCode::DomainError, "select_vacuum: no roots supplied");

    // At sigma = 0 the supplied potential is identically zero (every
    // coefficient carries sigma); rank the roots by the scale-free limit
    // functional instead. Its minima coincide with those of U for sigma -> 0+.
    const bool degenerate_scale = !(pot.coeffs.lam > 0.0);
    const SingletPotential ranking =
        degenerate_scale ? sigma0_limit_potential(params) : pot;

    // Deduplicate (polished roots of a degenerate cubic can repeat).
    std::vector<double> uniq(roots);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end(),
                           [](double a, double b) {
                               return std::abs(a - b) <=
                                      1e-11 * std::max(1.0, std::abs(a));
                           }),
               uniq.end());

    struct Candidate {
        double root, value, curvature;
    };
    std::vector<Candidate> minima;
    for (double r : uniq) {
        if (!(r > 0.0)) continue;
        const PotentialDerivs d = potential_derivatives(ranking, r);
        if (d.second > 0.0)
            minima.push_back({r, potential_value(ranking, r), d.second});
    }
    if (minima.empty())
        throw Error(ErrorCode::NoVacuum,
                    "select_vacuum: no positive, stable minimum among the roots");

    const Candidate* best = &minima.front();
    for (const Candidate& m : minima)
        if (m.value < best->value) best = &m;

    // Degenerate minima: among value-ties take the larger root, and say so.
    // (Which tie wins the strict comparison above is rounding noise.)
    bool degenerate = false;
    for (const Candidate& m : minima) {
        if (&m == best) continue;
        if (std::abs(m.value - best->value) <=
            1e-12 * std::max(1.0, std::abs(best->value))) {
            degenerate = true;
            if (m.root > best->root) best = &m;
        }
    }
    if (degenerate && warnings)
        warnings->push_back("degenerate minima: resolved to the larger root");
    if (minima.size() > 1 && warnings)
        warnings->push_back("multiple positive minima: selected the deepest");

    VacuumSolution sol;
    sol.phi0 = best->root;
    sol.all_real_roots = roots;
    sol.kind = VacuumKind::CardanoSelected;

    if (degenerate_scale) {
        sol.curvature = best->curvature;  // curvature of the limit functional
        const double c_q =
            condensates_forward(params.n_c, params.lambda_cut, params.m_asym).c_q;
        const CubicCoefficients cc = cubic_coefficients(params, c_q, 0.0);
        sol.residual = std::abs(cubic_value(cc, sol.phi0));
    } else {
        sol.curvature = best->curvature;
        // U' = 4 lam * cubic, so the cubic residual follows from U' alone.
        sol.residual = std::abs(potential_derivatives(pot, sol.phi0).first /
                                (4.0 * pot.coeffs.lam));
    }
    return sol;
}

double vacuum_closed_form_m0(const ModelParams& params, double sigma) {
    if (params.m_asym != 0.0)
        throw Error(ErrorCode::Misuse,
                    "vacuum_closed_form_m0: only valid for m_asym = 0");
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError, "vacuum_closed_form_m0: sigma must be >= 0");
    // mu2/lam with the common factor sigma cancelled, so sigma = 0 is exact.
    return std::sqrt(12.0 * pi_sq * params.f_pi * params.f_pi *
                     xi_factor(2, sigma) / params.n_c);
}

double vacuum_closed_form_sigma0(const ModelParams& params) {
    const double phi0 = std::numbers::sqrt3 * params.lambda_cut - params.m_asym;
    if (!(phi0 > 0.0))
        throw Error(ErrorCode::NoVacuum,
                    "vacuum_closed_form_sigma0: m_asym >= sqrt(3) lambda_cut "
                    "leaves no positive vacuum");
    return phi0;
}

double vacuum_oracle_grid(const SingletPotential& pot, double s_max, int n_points) {
    if (!(s_max > 0.0))
        throw Error(ErrorCode::DomainError, "vacuum_oracle_grid: s_max must be > 0");
    if (n_points < 1000)
        throw Error(ErrorCode::DomainError,
                    "vacuum_oracle_grid: need at least 1000 grid points");

    const double h = s_max / n_points;
    int best = 1;
    double best_val = potential_value(pot, h);
    for (int i = 2; i <= n_points; ++i) {
        const double v = potential_value(pot, i * h);
        if (v < best_val) {  // strict: ties stay at the smaller s
            best_val = v;
            best = i;
        }
    }
    if (best == n_points)
        throw Error(ErrorCode::RangeError,
                    "vacuum_oracle_grid: minimum on the s_max boundary; "
                    "enlarge the scan range");

    // Golden-section refinement on the bracketing interval.
    double lo = (best - 1) * h;
    double hi = (best + 1) * h;
    if (lo <= 0.0) lo = h * 1e-6;
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = potential_value(pot, x1);
    double f2 = potential_value(pot, x2);
    const double tol = 1e-10 * s_max;
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = potential_value(pot, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = potential_value(pot, x2);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace compscal
