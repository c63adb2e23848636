#pragma once
#include <array>
#include <optional>
#include <utility>

namespace compscal {

// Vacuum condensates characterizing the low-energy region. Note the sign
// convention: on the physical branch lambda_cut > m_asym >= 0 the quark
// condensate c_q is <= 0, and c_g is negative for m_asym well below
// lambda_cut (it changes sign near m_asym/lambda_cut = sqrt(2) - 1).
struct Condensates {
    double c_q;  // quark condensate [GeV^3]
    double c_g;  // gluon condensate [GeV^4]
};

// c_q = -(n_c/2pi^2) (lambda^2 m - m^3/3)
// c_g = (3 n_c/2pi^2) (6 lambda^2 m^2 - lambda^4 - m^4)
Condensates condensates_forward(int n_c, double lambda_cut, double m_asym);

// Row-major partials: [[dc_q/dLambda, dc_q/dM], [dc_g/dLambda, dc_g/dM]].
using Jacobian2 = std::array<std::array<double, 2>, 2>;
Jacobian2 forward_jacobian(int n_c, double lambda_cut, double m_asym);

// Inverse of condensates_forward on the branch lambda_cut > m_asym >= 0:
// damped 2-D Newton with the analytic Jacobian, multi-start over a log grid
// in lambda_cut when no guess is supplied. Returns (lambda_cut, m_asym).
std::pair<double, double>
condensates_invert(int n_c, const Condensates& target,
                   std::optional<std::pair<double, double>> guess = {});

} // namespace compscal
