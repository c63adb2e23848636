#pragma once
#include "compscal/params.hpp"

namespace compscal {

// Quartic coupling of the induced potential. Shared by the potential and the
// axial/vector shifts so the lam/3 identities hold bitwise.
inline double quartic_coupling(int n_c, double sigma) {
    return n_c * sigma / (4.0 * pi_sq);
}

// Coefficients of the singlet-direction potential at running distance sigma.
// Every coefficient carries a factor sigma, so all vanish in the sigma -> 0
// limit (the scale-free limit is handled by the vacuum solver).
struct PotentialCoeffs {
    double mu2;    // quadratic: 3 f_pi^2 sigma xi2 [GeV^2]
    double lam;    // quartic:   n_c sigma / 4pi^2
    double c_lin;  // linear:    3 c_q sigma xi3 [GeV^3]
    double c_cub;  // cubic:     n_c m_asym sigma xi1 / 2pi^2 [GeV]
    double sigma;
};

// Potential along the singlet direction with the flavor trace applied.
struct SingletPotential {
    PotentialCoeffs coeffs;
    int flavor_trace = 2;  // two degenerate flavors
};

// strict: require c_q to agree with condensates_forward(params) to 1e-10.
PotentialCoeffs potential_coeffs(const ModelParams& params, double c_q,
                                 double sigma, bool strict = true);
SingletPotential singlet_potential(const ModelParams& params, double c_q,
                                   double sigma, bool strict = true);

// U(s) = -2 mu2 s^2 + lam s^4 + 2 c_lin s + 2 c_cub s^3 [GeV^4]; the
// non-kinetic part of the induced Lagrangian with flipped sign, so minima of
// U are vacua. Requires s > 0 (the fluctuation representation needs a
// positive scale).
double potential_value(const SingletPotential& pot, double s);

struct PotentialDerivs {
    double first;   // U'  [GeV^3]
    double second;  // U'' [GeV^2]
};
PotentialDerivs potential_derivatives(const SingletPotential& pot, double s);

// Kinetic renormalization constant z_phi = n_c sigma phi0^2 / 2pi^2.
// Positive for sigma > 0, exactly zero at the compositeness scale sigma = 0.
double kinetic_constant(const ModelParams& params, double sigma, double phi0);

} // namespace compscal
