#pragma once
#include <string>
#include <vector>

#include "compscal/params.hpp"
#include "compscal/potential.hpp"

namespace compscal {

// Monic stationarity cubic phi^3 + a2 phi^2 + a1 phi + a0 = 0; U'(s) equals
// 4 lam times this polynomial for sigma > 0.
struct CubicCoefficients {
    double a2;  // [GeV]
    double a1;  // [GeV^2]
    double a0;  // [GeV^3]
};

enum class VacuumKind { ClosedFormM0, ClosedFormSigma0, CardanoSelected };

struct VacuumSolution {
    double phi0;                       // selected vacuum [GeV], > 0
    std::vector<double> all_real_roots;
    double curvature;                  // U'' at phi0 [GeV^2] (see note below)
    double residual;                   // |cubic(phi0)| [GeV^3]
    VacuumKind kind;
};
// Note: at sigma = 0 the potential itself degenerates (all coefficients carry
// a factor sigma); there `curvature` holds the curvature of the scale-free
// limit U/(4 lam), which has the same sign and the same GeV^2 units.

// a2 = 3 m_asym xi1; a1 = -12 pi^2 f_pi^2 xi2 / n_c; a0 = 6 pi^2 c_q xi3 / n_c.
// The common factor sigma cancels against the quartic coupling, so the same
// expressions evaluate to the scale-free limit at sigma = 0 (xi -> 1).
CubicCoefficients cubic_coefficients(const ModelParams& params, double c_q,
                                     double sigma);

// All real roots, ascending. Trigonometric form when three real roots exist,
// the cancellation-safe Cardano branch otherwise; every root gets a guarded
// Newton polish.
std::vector<double> solve_cubic(const CubicCoefficients& c);

// The scale-free sigma -> 0 limit of U/(4 lam) packaged as a synthetic
// potential: 0.25 s^4 + (a2/3) s^3 + (a1/2) s^2 + a0 s. Used to rank vacua
// when sigma = 0 and by the brute-force oracle in that limit.
SingletPotential sigma0_limit_potential(const ModelParams& params);

// Among roots that are positive and locally stable, pick the one with the
// lowest potential; degenerate minima resolve to the larger root with a
// warning. Throws a no-vacuum error when no root qualifies.
VacuumSolution select_vacuum(const ModelParams& params, double sigma,
                             const std::vector<double>& roots,
                             const SingletPotential& pot,
                             std::vector<std::string>* warnings = nullptr);

// m_asym = 0 closed form: phi0 = sqrt(mu2/lam) = sqrt(12 pi^2 f_pi^2 xi2/n_c).
double vacuum_closed_form_m0(const ModelParams& params, double sigma);

// sigma = 0 closed form (derived-f_pi relation): phi0 = sqrt(3) lambda_cut - m_asym.
double vacuum_closed_form_sigma0(const ModelParams& params);

// Brute-force oracle: scan U on a uniform grid over (0, s_max], refine the
// grid minimizer by golden-section search to width 1e-10 * s_max. Test-side
// validation of select_vacuum only.
double vacuum_oracle_grid(const SingletPotential& pot, double s_max, int n_points);

} // namespace compscal
