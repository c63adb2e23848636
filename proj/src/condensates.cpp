#include "compscal/condensates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "compscal/errors.hpp"
#include "compscal/params.hpp"

namespace compscal {

Condensates condensates_forward(int n_c, double lambda_cut, double m_asym) {
    if (n_c < 1)
        throw Error(ErrorCode::DomainError, "condensates_forward: n_c must be >= 1");
    // The map itself is a polynomial; m_asym may be negated to exercise the
    // oddness of c_q. The physical branch constraint lives in the inverse.
    if (!(lambda_cut > 0.0) || !std::isfinite(m_asym))
        throw Error(ErrorCode::DomainError,
                    "condensates_forward: need lambda_cut > 0 and finite m_asym");
    const double l2 = lambda_cut * lambda_cut;
    const double m2 = m_asym * m_asym;
    // + 0.0 normalizes the signed zero at m_asym = 0 without touching any
    // other value (and keeps the oddness in m_asym bitwise).
    const double c_q =
        -(n_c / (2.0 * pi_sq)) * (l2 * m_asym - m2 * m_asym / 3.0) + 0.0;
    const double c_g =
        (3.0 * n_c / (2.0 * pi_sq)) * (6.0 * l2 * m2 - l2 * l2 - m2 * m2);
    return {c_q, c_g};
}

Jacobian2 forward_jacobian(int n_c, double lambda_cut, double m_asym) {
    if (n_c < 1)
        throw Error(ErrorCode::DomainError, "forward_jacobian: n_c must be >= 1");
    const double l = lambda_cut, m = m_asym;
    const double kq = n_c / (2.0 * pi_sq);
    const double kg = 3.0 * n_c / (2.0 * pi_sq);
    return {{{-kq * 2.0 * l * m, -kq * (l * l - m * m)},
             {kg * (12.0 * l * m * m - 4.0 * l * l * l),
              kg * (12.0 * l * l * m - 4.0 * m * m * m)}}};
}

namespace {

struct NewtonResult {
    double lambda_cut;
    double m_asym;
    double residual;   // max-norm of forward(x) - target
    bool converged;
};

double residual_norm(int n_c, double l, double m, const Condensates& target) {
    const Condensates c = condensates_forward(n_c, l, m);
    return std::max(std::abs(c.c_q - target.c_q), std::abs(c.c_g - target.c_g));
}

// Damped Newton from a single start, kept inside the branch l > m >= 0.
NewtonResult newton_from(int n_c, double l, double m, const Condensates& target,
                         double tol) {
    double r = residual_norm(n_c, l, m, target);
    for (int it = 0; it < 200; ++it) {
        if (r <= tol) return {l, m, r, true};
        const Condensates c = condensates_forward(n_c, l, m);
        const Jacobian2 jac = forward_jacobian(n_c, l, m);
        const double fq = c.c_q - target.c_q;
        const double fg = c.c_g - target.c_g;
        const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if (!std::isfinite(det) || det == 0.0) break;
        const double dl = (fq * jac[1][1] - fg * jac[0][1]) / det;
        const double dm = (fg * jac[0][0] - fq * jac[1][0]) / det;
        double t = 1.0;
        bool accepted = false;
        for (int h = 0; h < 30; ++h) {
            const double ln = l - t * dl;
            const double mn = m - t * dm;
            if (ln > 0.0 && mn >= 0.0 && mn < ln) {
                const double rn = residual_norm(n_c, ln, mn, target);
                if (rn < r) {
                    l = ln;
                    m = mn;
                    r = rn;
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if (!accepted) break;  // stalled: no in-branch descent direction left
    }
    return {l, m, r, r <= tol};
}

} // namespace

std::pair<double, double>
condensates_invert(int n_c, const Condensates& target,
                   std::optional<std::pair<double, double>> guess) {
    if (n_c < 1)
        throw Error(ErrorCode::DomainError, "condensates_invert: n_c must be >= 1");
    if (!std::isfinite(target.c_q) || !std::isfinite(target.c_g))
        throw Error(ErrorCode::DomainError, "condensates_invert: target not finite");

    // On the branch, c_q = -(n_c/2pi^2) m (lambda^2 - m^2/3) <= 0 always.
    if (target.c_q > 0.0)
        throw Error(ErrorCode::NoSolution,
                    "condensates_invert: c_q > 0 is outside the image of the "
                    "branch lambda_cut > m_asym >= 0");
    if (target.c_q == 0.0) {
        // m_asym = 0 exactly; then c_g = -3 n_c lambda^4 / 2pi^2 < 0.
        if (!(target.c_g < 0.0))
            throw Error(ErrorCode::NoSolution,
                        "condensates_invert: c_q = 0 requires c_g < 0 on the branch");
        const double l = std::pow(-2.0 * pi_sq * target.c_g / (3.0 * n_c), 0.25);
        return {l, 0.0};
    }

    const double scale = std::max(std::abs(target.c_q), std::abs(target.c_g));
    const double tol = 1e-13 * scale;

    if (guess) {
        double l0 = guess->first, m0 = guess->second;
        if (!(l0 > 0.0) || !(m0 >= 0.0) || !(m0 < l0))
            throw Error(ErrorCode::DomainError,
                        "condensates_invert: guess must satisfy lambda_cut > m_asym >= 0");
        const NewtonResult res = newton_from(n_c, l0, m0, target, tol);
        if (!res.converged) {
            std::ostringstream os;
            os << "condensates_invert: no convergence from the supplied guess "
               << "(best residual " << res.residual << ")";
            throw Error(ErrorCode::SolverFailure, os.str());
        }
        return {res.lambda_cut, res.m_asym};
    }

    // Multi-start: lambda on a log grid around a magnitude estimate from the
    // target, m_asym as a fraction of each lambda. Starts are tried in grid
    // order and the lowest-residual converged one wins (ties to the earlier
    // start), so the result is deterministic.
    const double l_est =
        std::max(std::pow(2.0 * pi_sq * std::abs(target.c_g) / (3.0 * n_c), 0.25),
                 std::pow(2.0 * pi_sq * std::abs(target.c_q) / n_c, 1.0 / 3.0));
    NewtonResult best{0.0, 0.0, std::numeric_limits<double>::infinity(), false};
    for (int i = 0; i < 9; ++i) {
        // 9 log-spaced factors covering [0.25, 4]
        const double fl = 0.25 * std::pow(16.0, i / 8.0);
        for (int j = 0; j < 10; ++j) {
            const double fm = 0.1 * j;
            const NewtonResult res =
                newton_from(n_c, l_est * fl, l_est * fl * fm, target, tol);
            if (res.converged && res.residual < best.residual) best = res;
        }
    }
    if (!best.converged) {
        std::ostringstream os;
        os << "condensates_invert: no start converged; target may be outside "
           << "the branch image (best residual " << best.residual << ")";
        throw Error(ErrorCode::SolverFailure, os.str());
    }
    return {best.lambda_cut, best.m_asym};
}

} // namespace compscal
