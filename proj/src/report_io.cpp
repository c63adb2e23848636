#include "compscal/report_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "compscal/errors.hpp"

namespace compscal {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(VacuumKind kind) {
    switch (kind) {
    case VacuumKind::ClosedFormM0:    return "ClosedFormM0";
    case VacuumKind::ClosedFormSigma0: return "ClosedFormSigma0";
    case VacuumKind::CardanoSelected:  return "CardanoSelected";
    }
    return "unknown";
}

ordered_json point_json(const PointReport& r) {
    ordered_json j;
    j["params"] = {
        {"n_c", r.params.n_c},
        {"lambda_cut", r.params.lambda_cut},
        {"m_asym", r.params.m_asym},
        {"f_pi", r.params.f_pi},
        {"f_pi_mode",
         r.params.f_pi_mode == FpiMode::Derived ? "Derived" : "Override"},
    };
    j["sigma"] = r.sigma;
    j["mu"] = r.mu;
    if (r.condensates)
        j["condensates"] = {{"c_q", r.condensates->c_q},
                            {"c_g", r.condensates->c_g}};
    else
        j["condensates"] = nullptr;
    if (r.cubic)
        j["cubic"] = {{"a2", r.cubic->a2}, {"a1", r.cubic->a1}, {"a0", r.cubic->a0}};
    else
        j["cubic"] = nullptr;
    if (r.vacuum) {
        j["vacuum"] = {{"phi0", r.vacuum->phi0},
                       {"all_real_roots", r.vacuum->all_real_roots},
                       {"curvature", r.vacuum->curvature},
                       {"residual", r.vacuum->residual},
                       {"kind", kind_name(r.vacuum->kind)}};
    } else {
        j["vacuum"] = nullptr;
    }
    if (r.spectrum) {
        const SpectrumReport& s = *r.spectrum;
        ordered_json js = {{"m_phi", s.m_phi},       {"m_psi", s.m_psi},
                           {"z_phi", s.z_phi},       {"delta_mA2", s.delta_mA2},
                           {"m_A2", s.m_A2},         {"delta_V", s.delta_V},
                           {"width_ratio", s.width_ratio}};
        if (s.hessian_residual)
            js["hessian_residual"] = *s.hessian_residual;
        else
            js["hessian_residual"] = nullptr;
        j["spectrum"] = js;
    } else {
        j["spectrum"] = nullptr;
    }
    j["warnings"] = r.warnings;
    j["status"] = r.status;
    j["error_message"] = r.error_message;
    return j;
}

void csv_row(std::ostream& out, const PointReport& r) {
    out << format_double(r.sigma) << ',' << format_double(r.mu) << ',';
    if (r.ok()) {
        const SpectrumReport& s = *r.spectrum;
        out << format_double(r.condensates->c_q) << ','
            << format_double(r.condensates->c_g) << ','
            << format_double(r.vacuum->phi0) << ','
            << format_double(s.m_phi) << ',' << format_double(s.m_psi) << ','
            << format_double(s.z_phi) << ',' << format_double(s.delta_mA2)
            << ',' << format_double(s.m_A2) << ',' << format_double(s.delta_V)
            << ',' << format_double(s.width_ratio) << ',';
        if (s.hessian_residual) out << format_double(*s.hessian_residual);
    } else {
        out << ",,,,,,,,,,";
    }
    out << ',' << r.status << '\n';
}

constexpr const char* kCsvHeader =
    "sigma,mu,c_q,c_g,phi0,m_phi,m_psi,z_phi,delta_mA2,m_A2,delta_V,"
    "width_ratio,hessian_residual,status";

} // namespace

void emit_report(const ScanTable& table, ReportFormat format, std::ostream& out) {
    if (table.rows.empty())
        throw Error(ErrorCode::Usage, "emit_report: table is empty");
    if (format == ReportFormat::CSV) {
        out << kCsvHeader << '\n';
        for (const PointReport& r : table.rows) csv_row(out, r);
    } else {
        out << table_to_json(table) << '\n';
    }
    if (!out)
        throw Error(ErrorCode::IoError, "emit_report: write failed");
}

void emit_report(const ScanTable& table, ReportFormat format,
                 const std::string& destination) {
    if (destination.empty() || destination == "-") {
        emit_report(table, format, std::cout);
        return;
    }
    std::ofstream out(destination);
    if (!out)
        throw Error(ErrorCode::IoError,
                    "emit_report: cannot open '" + destination + "' for writing");
    emit_report(table, format, out);
}

void emit_point(const PointReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::CSV) {
        out << kCsvHeader << '\n';
        csv_row(out, report);
    } else {
        out << point_to_json(report) << '\n';
    }
    if (!out)
        throw Error(ErrorCode::IoError, "emit_point: write failed");
}

void emit_point(const PointReport& report, ReportFormat format,
                const std::string& destination) {
    if (destination.empty() || destination == "-") {
        emit_point(report, format, std::cout);
        return;
    }
    std::ofstream out(destination);
    if (!out)
        throw Error(ErrorCode::IoError,
                    "emit_point: cannot open '" + destination + "' for writing");
    emit_point(report, format, out);
}

std::string point_to_json(const PointReport& report) {
    return point_json(report).dump(2);
}

std::string table_to_json(const ScanTable& table) {
    ordered_json j;
    j["grid"] = {
        {"sigma_min", table.grid.sigma_min},
        {"sigma_max", table.grid.sigma_max},
        {"n", table.grid.n},
        {"spacing",
         table.grid.spacing == GridSpacing::Linear ? "Linear" : "Log"},
    };
    ordered_json rows = ordered_json::array();
    for (const PointReport& r : table.rows) rows.push_back(point_json(r));
    j["rows"] = rows;
    j["diagnostics"] = {
        {"m_phi_monotone_decreasing", table.diagnostics.m_phi_monotone_decreasing},
        {"monotonicity_findings", table.diagnostics.monotonicity_findings},
        {"phi0_continuous", table.diagnostics.phi0_continuous},
        {"continuity_findings", table.diagnostics.continuity_findings},
    };
    return j.dump(2);
}

std::string table_to_csv(const ScanTable& table) {
    std::ostringstream os;
    emit_report(table, ReportFormat::CSV, os);
    return os.str();
}

} // namespace compscal
