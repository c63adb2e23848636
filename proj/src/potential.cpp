#include "compscal/potential.hpp"

#include <cmath>
#include <sstream>

#include "compscal/condensates.hpp"
#include "compscal/errors.hpp"

namespace compscal {

PotentialCoeffs potential_coeffs(const ModelParams& params, double c_q,
                                 double sigma, bool strict) {
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError, "potential_coeffs: sigma must be >= 0");
    if (strict) {
        const double expected =
            condensates_forward(params.n_c, params.lambda_cut, params.m_asym).c_q;
        const double tol = 1e-10 * std::max(1.0, std::abs(expected));
        if (std::abs(c_q - expected) > tol) {
            std::ostringstream os;
            os << "potential_coeffs: c_q = " << c_q
               << " inconsistent with condensates_forward(params) = " << expected;
            throw Error(ErrorCode::Inconsistent, os.str());
        }
    }
    const XiFactors xi = xi_factors(sigma);
    PotentialCoeffs c;
    c.mu2 = 3.0 * params.f_pi * params.f_pi * sigma * xi.xi2;
    c.lam = quartic_coupling(params.n_c, sigma);
    c.c_lin = 3.0 * c_q * sigma * xi.xi3;
    c.c_cub = params.n_c * params.m_asym * sigma * xi.xi1 / (2.0 * pi_sq);
    c.sigma = sigma;
    return c;
}

SingletPotential singlet_potential(const ModelParams& params, double c_q,
                                   double sigma, bool strict) {
    return {potential_coeffs(params, c_q, sigma, strict), 2};
}

double potential_value(const SingletPotential& pot, double s) {
    if (!(s > 0.0))
        throw Error(ErrorCode::DomainError,
                    "potential_value: s must be > 0 (positive scale required)");
    const PotentialCoeffs& c = pot.coeffs;
    const double s2 = s * s;
    return -2.0 * c.mu2 * s2 + c.lam * s2 * s2 + 2.0 * c.c_lin * s +
           2.0 * c.c_cub * s2 * s;
}

PotentialDerivs potential_derivatives(const SingletPotential& pot, double s) {
    if (!(s > 0.0))
        throw Error(ErrorCode::DomainError,
                    "potential_derivatives: s must be > 0");
    const PotentialCoeffs& c = pot.coeffs;
    const double first =
        -4.0 * c.mu2 * s + 4.0 * c.lam * s * s * s + 2.0 * c.c_lin +
        6.0 * c.c_cub * s * s;
    const double second =
        -4.0 * c.mu2 + 12.0 * c.lam * s * s + 12.0 * c.c_cub * s;
    return {first, second};
}

double kinetic_constant(const ModelParams& params, double sigma, double phi0) {
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError, "kinetic_constant: sigma must be >= 0");
    if (!(phi0 > 0.0))
        throw Error(ErrorCode::DomainError, "kinetic_constant: phi0 must be > 0");
    return params.n_c * sigma * phi0 * phi0 / (2.0 * pi_sq);
}

} // namespace compscal
