#pragma once
#include <optional>

#include "compscal/params.hpp"
#include "compscal/potential.hpp"

namespace compscal {

// Physical outputs at one (params, sigma) point.
struct SpectrumReport {
    double m_phi;       // scalar mass [GeV]
    double m_psi;       // dynamical quark mass = phi0 [GeV]
    double z_phi;       // kinetic renormalization constant [GeV^2]
    double delta_mA2;   // axial mass shift (lam/3) m_phi^2 [GeV^2]
    double m_A2;        // m_0A^2 + delta_mA2, or m_phi^2 in composite-A mode [GeV^2]
    double delta_V;     // vector coupling shift lam/3
    double width_ratio; // scalar-pseudoscalar coupling suppression factor
    // |m_phi - oracle| / m_phi; absent at sigma = 0 where the curvature
    // oracle is undefined (z_phi vanishes).
    std::optional<double> hessian_residual;
};

// m_phi^2 = 6 [phi0^2 + 2 m_asym phi0 xi1 + (m_asym^2 - lambda_cut^2) xi2].
// A negative bracket signals an unphysical (tachyonic) region and throws.
double scalar_mass(const ModelParams& params, double sigma, double phi0);

// Independent curvature check: m^2 = phi0^2 U''(phi0) / z_phi with U'' from
// central finite differences. Exactly equals scalar_mass in derived-f_pi
// mode; the disagreement in override mode is reported, not raised.
double scalar_mass_hessian_oracle(const ModelParams& params, double sigma,
                                  double phi0, const SingletPotential& pot);

// Identity map with the unit/positivity check: m_psi = phi0.
double quark_mass(double phi0);

struct AxialShift {
    double delta_mA2;  // [GeV^2]
    double m_A2;       // [GeV^2]
};
// delta_mA2 = (lam/3) m_phi^2, computed through vector_coupling_shift so the
// delta_A = delta_V identity holds bitwise; m_A2 = m_0A^2 + delta_mA2.
AxialShift axial_mass_shift(const ModelParams& params, double sigma,
                            double m_phi, double m_0A);

// Relative deviation of the axial quadratic-form coefficient
// (2/3) mu2 - 2 lam phi0^2 - (n_c m_asym / pi^2) sigma xi1 phi0 from
// -(lam/3) m_phi^2. Vanishes identically in derived-f_pi mode.
double axial_quadratic_check(const ModelParams& params, double sigma, double phi0);

// sigma n_c / 12 pi^2, computed as lam/3.
double vector_coupling_shift(const ModelParams& params, double sigma);

// m_asym xi1 sqrt(3 sigma / 2 pi^2) / f_pi: suppression of the
// scalar-pseudoscalar coupling relative to a dilaton-type coupling 1/f_pi.
double width_coupling_ratio(const ModelParams& params, double sigma);

} // namespace compscal
