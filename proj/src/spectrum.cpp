#include "compscal/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "compscal/errors.hpp"

namespace compscal {

double scalar_mass(const ModelParams& params, double sigma, double phi0) {
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError, "scalar_mass: sigma must be >= 0");
    if (!(phi0 > 0.0))
        throw Error(ErrorCode::DomainError, "scalar_mass: phi0 must be > 0");
    const XiFactors xi = xi_factors(sigma);
    const double m = params.m_asym, l = params.lambda_cut;
    const double bracket =
        phi0 * phi0 + 2.0 * m * phi0 * xi.xi1 + (m * m - l * l) * xi.xi2;
    const double m2 = 6.0 * bracket;
    if (m2 < 0.0) {
        std::ostringstream os;
        os << "scalar_mass: mass^2 = " << m2
           << " < 0 (tachyonic); parameters outside the stable region";
        throw Error(ErrorCode::Tachyonic, os.str());
    }
    return std::sqrt(m2);
}

double scalar_mass_hessian_oracle(const ModelParams& params, double sigma,
                                  double phi0, const SingletPotential& pot) {
    if (!(sigma > 0.0))
        throw Error(ErrorCode::Misuse,
                    "scalar_mass_hessian_oracle: needs sigma > 0 (z_phi "
                    "vanishes at the compositeness scale)");
    if (!(phi0 > 0.0))
        throw Error(ErrorCode::DomainError,
                    "scalar_mass_hessian_oracle: phi0 must be > 0");
    const double h = 1e-4 * phi0;
    const double u_mid = potential_value(pot, phi0);
    const double u_lo = potential_value(pot, phi0 - h);
    const double u_hi = potential_value(pot, phi0 + h);
    const double second = (u_hi - 2.0 * u_mid + u_lo) / (h * h);
    const double z = kinetic_constant(params, sigma, phi0);
    const double m2 = phi0 * phi0 * second / z;
    if (m2 < 0.0) {
        std::ostringstream os;
        os << "scalar_mass_hessian_oracle: curvature mass^2 = " << m2 << " < 0";
        throw Error(ErrorCode::Tachyonic, os.str());
    }
    return std::sqrt(m2);
}

double quark_mass(double phi0) {
    if (!(phi0 > 0.0))
        throw Error(ErrorCode::DomainError, "quark_mass: phi0 must be > 0");
    return phi0;
}

AxialShift axial_mass_shift(const ModelParams& params, double sigma,
                            double m_phi, double m_0A) {
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError, "axial_mass_shift: sigma must be >= 0");
    const double delta = vector_coupling_shift(params, sigma) * m_phi * m_phi;
    return {delta, m_0A * m_0A + delta};
}

double axial_quadratic_check(const ModelParams& params, double sigma, double phi0) {
    const double lam = quartic_coupling(params.n_c, sigma);
    const double mu2 = 3.0 * params.f_pi * params.f_pi * sigma * xi_factor(2, sigma);
    const double coeff = (2.0 / 3.0) * mu2 - 2.0 * lam * phi0 * phi0 -
                         (params.n_c * params.m_asym / pi_sq) * sigma *
                             xi_factor(1, sigma) * phi0;
    const double m_phi = scalar_mass(params, sigma, phi0);
    const double target = -(lam / 3.0) * m_phi * m_phi;
    const double scale = std::max(std::abs(coeff), std::abs(target));
    if (scale == 0.0) return 0.0;  // sigma = 0: both sides vanish identically
    return std::abs(coeff - target) / scale;
}

double vector_coupling_shift(const ModelParams& params, double sigma) {
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError,
                    "vector_coupling_shift: sigma must be >= 0");
    return quartic_coupling(params.n_c, sigma) / 3.0;
}

double width_coupling_ratio(const ModelParams& params, double sigma) {
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError,
                    "width_coupling_ratio: sigma must be >= 0");
    return params.m_asym * xi_factor(1, sigma) *
           std::sqrt(3.0 * sigma / (2.0 * pi_sq)) / params.f_pi;
}

} // namespace compscal
