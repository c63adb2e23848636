#pragma once
#include <optional>
#include <string>
#include <vector>

#include "compscal/condensates.hpp"
#include "compscal/params.hpp"
#include "compscal/potential.hpp"
#include "compscal/spectrum.hpp"
#include "compscal/vacuum.hpp"

namespace compscal {

struct PointOptions {
    double m_0A = 0.0;        // elementary axial bare mass [GeV]
    bool composite_a = false; // equal-scale composite axial: m_A^2 = m_phi^2
};

// One fully evaluated (params, sigma) point. The sub-records are present iff
// the pipeline succeeded; on failure only the inputs, the status token and
// the error message are populated.
struct PointReport {
    ModelParams params;
    double sigma = 0.0;
    double mu = 0.0;
    std::optional<Condensates> condensates;
    std::optional<CubicCoefficients> cubic;
    std::optional<VacuumSolution> vacuum;
    std::optional<SpectrumReport> spectrum;
    std::vector<std::string> warnings;
    std::string status = "ok";
    std::string error_message;

    bool ok() const { return status == "ok"; }
};

// condensates -> coefficients -> cubic -> vacuum -> spectrum. Closed forms
// are used where they are exact: the sigma = 0 limit in derived-f_pi mode and
// the m_asym = 0 family; everything else goes through the cubic solver.
// Errors are captured in the report, never thrown.
PointReport run_point(const ModelParams& params, double sigma,
                      const PointOptions& opts = {});

enum class GridSpacing { Linear, Log };

struct GridSpec {
    double sigma_min = 0.0;
    double sigma_max = 2.0;
    int n = 21;
    GridSpacing spacing = GridSpacing::Linear;
};

std::vector<double> grid_points(const GridSpec& grid);

// Scan-level consistency diagnostics. Monotonicity violations are findings
// to surface, not failures.
struct ScanDiagnostics {
    bool m_phi_monotone_decreasing = true;
    std::vector<std::string> monotonicity_findings;
    bool phi0_continuous = true;
    std::vector<std::string> continuity_findings;
};

struct ScanTable {
    GridSpec grid;
    std::vector<PointReport> rows;  // sorted by sigma, one per grid point
    ScanDiagnostics diagnostics;
};

// One PointReport per grid point; failed points are recorded in place and
// never abort the remaining points.
ScanTable run_scan(const ModelParams& params, const GridSpec& grid,
                   const PointOptions& opts = {});

} // namespace compscal
