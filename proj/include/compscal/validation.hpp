#pragma once
#include <optional>
#include <string>
#include <vector>

#include "compscal/params.hpp"

namespace compscal {

struct CheckResult {
    std::string name;
    bool passed;
    bool informational;  // findings and override-mode downgrades: reported,
                         // never fail the suite
    std::string detail;  // worst-case numbers or the first counterexample
};

// Full cross-module invariant suite. With params, the parameter-dependent
// checks run at that single parameter set; without, they sweep the standard
// grid (lambda_cut in {0.5, 1, 2}, m_asym/lambda_cut in {0, 0.1, 0.3, 0.5},
// n_c = 3, derived f_pi). Sigma probes are {0.01, 0.1, 0.5, 1, 2} plus the
// 0 and 1e-6 limit points.
std::vector<CheckResult> run_validation(const std::optional<ModelParams>& params = {});

// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace compscal
