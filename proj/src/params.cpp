#include "compscal/params.hpp"

#include <cmath>
#include <sstream>

#include "compscal/errors.hpp"

namespace compscal {

const char* to_token(ErrorCode code) {
    switch (code) {
    case ErrorCode::DomainError:   return "domain_error";
    case ErrorCode::Usage:         return "usage";
    case ErrorCode::NoSolution:    return "no_solution";
    case ErrorCode::SolverFailure: return "solver_failure";
    case ErrorCode::NoVacuum:      return "no_vacuum";
    case ErrorCode::Tachyonic:     return "tachyonic";
    case ErrorCode::Inconsistent:  return "inconsistent";
    case ErrorCode::Misuse:        return "misuse";
    case ErrorCode::RangeError:    return "range_error";
    case ErrorCode::IoError:       return "io_error";
    }
    return "unknown";
}

double xi_factor(int n, double sigma) {
    if (n < 1 || n > 3)
        throw Error(ErrorCode::DomainError, "xi_factor: n must be 1, 2 or 3");
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError, "xi_factor: sigma must be >= 0");
    const double x = n * sigma;
    if (x < 1e-6) {
        // series truncation error ~ x^4/120 < 1e-26 at the threshold
        return 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0;
    }
    return -std::expm1(-x) / x;
}

XiFactors xi_factors(double sigma) {
    return {xi_factor(1, sigma), xi_factor(2, sigma), xi_factor(3, sigma)};
}

RunningPoint running_scale(const ModelParams& params, double sigma) {
    if (!(sigma >= 0.0))
        throw Error(ErrorCode::DomainError, "running_scale: sigma must be >= 0");
    return {sigma, params.lambda_cut * std::exp(-sigma)};
}

double derive_fpi(int n_c, double lambda_cut, double m_asym) {
    if (n_c < 1)
        throw Error(ErrorCode::DomainError, "derive_fpi: n_c must be >= 1");
    if (!(lambda_cut > 0.0) || !(m_asym >= 0.0))
        throw Error(ErrorCode::DomainError,
                    "derive_fpi: need lambda_cut > 0 and m_asym >= 0");
    if (!(m_asym < lambda_cut))
        throw Error(ErrorCode::DomainError,
                    "derive_fpi: m_asym >= lambda_cut gives f_pi^2 <= 0");
    const double fpi2 =
        n_c * (lambda_cut * lambda_cut - m_asym * m_asym) / (4.0 * pi_sq);
    return std::sqrt(fpi2);
}

ModelParams derived_params(int n_c, double lambda_cut, double m_asym) {
    ModelParams p;
    p.n_c = n_c;
    p.lambda_cut = lambda_cut;
    p.m_asym = m_asym;
    p.f_pi = derive_fpi(n_c, lambda_cut, m_asym);
    p.f_pi_mode = FpiMode::Derived;
    return p;
}

ModelParams override_params(int n_c, double lambda_cut, double m_asym, double f_pi) {
    ModelParams p;
    p.n_c = n_c;
    p.lambda_cut = lambda_cut;
    p.m_asym = m_asym;
    p.f_pi = f_pi;
    p.f_pi_mode = FpiMode::Override;
    return p;
}

std::vector<ValidationIssue> validate_params(const ModelParams& params) {
    std::vector<ValidationIssue> report;
    auto violated = [&](const std::string& msg) {
        report.push_back({false, msg});
    };

    if (params.n_c < 1)
        violated("n_c >= 1 violated");
    if (!(params.lambda_cut > 0.0) || !std::isfinite(params.lambda_cut))
        violated("lambda_cut > 0 violated");
    if (!(params.m_asym >= 0.0) || !std::isfinite(params.m_asym))
        violated("m_asym >= 0 violated");
    if (!(params.m_asym < params.lambda_cut)) {
        // Hard requirement only where it is forced (derived f_pi^2 <= 0);
        // override mode proceeds and lets the vacuum/stability checks decide.
        if (params.f_pi_mode == FpiMode::Derived)
            violated("m_asym < lambda_cut violated");
        else
            report.push_back(
                {true, "m_asym < lambda_cut violated (override mode: "
                       "proceeding; expect an unstable or missing vacuum)"});
    }
    if (!(params.f_pi > 0.0) || !std::isfinite(params.f_pi))
        violated("f_pi > 0 violated");

    // f_pi consistency: exact requirement in Derived mode, informational
    // deviation flag in Override mode.
    if (params.n_c >= 1 && params.lambda_cut > 0.0 && params.m_asym >= 0.0 &&
        params.m_asym < params.lambda_cut && params.f_pi > 0.0) {
        const double derived = derive_fpi(params.n_c, params.lambda_cut, params.m_asym);
        const double dev = std::abs(params.f_pi - derived) / derived;
        if (params.f_pi_mode == FpiMode::Derived) {
            if (dev > 1e-12)
                violated("derived f_pi relation f_pi^2 = n_c (lambda_cut^2 - "
                         "m_asym^2) / (4 pi^2) violated");
        } else if (dev > 1e-12) {
            std::ostringstream os;
            os << "override f_pi differs from the derived value " << derived
               << " (relative deviation " << dev
               << "); curvature cross-checks are informational only";
            report.push_back({true, os.str()});
        }
    }
    return report;
}

bool params_ok(const std::vector<ValidationIssue>& report) {
    for (const auto& issue : report)
        if (!issue.informational) return false;
    return true;
}

} // namespace compscal
