#pragma once
#include <ostream>
#include <string>

#include "compscal/pipeline.hpp"

namespace compscal {

enum class ReportFormat { CSV, JSON };

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// CSV columns, in order: sigma, mu, c_q, c_g, phi0, m_phi, m_psi, z_phi,
// delta_mA2, m_A2, delta_V, width_ratio, hessian_residual, status. Failed
// rows keep sigma and mu and leave the computed fields empty; the status
// column carries the error token. JSON mirrors the PointReport structure
// with the same field names. Output is byte-deterministic.
void emit_report(const ScanTable& table, ReportFormat format, std::ostream& out);

// destination "-" means standard output.
void emit_report(const ScanTable& table, ReportFormat format,
                 const std::string& destination);

// Single-point emission used by the solve path: a one-row CSV with the same
// header, or the bare PointReport JSON object.
void emit_point(const PointReport& report, ReportFormat format, std::ostream& out);
void emit_point(const PointReport& report, ReportFormat format,
                const std::string& destination);

std::string point_to_json(const PointReport& report);
std::string table_to_json(const ScanTable& table);
std::string table_to_csv(const ScanTable& table);

} // namespace compscal
