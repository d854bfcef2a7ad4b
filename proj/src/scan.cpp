// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#include "coulphase/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "coulphase/gamma_kernel.hpp"
#include "coulphase/semiclassical.hpp"

namespace coulphase {

namespace {

constexpr double kPi = std::numbers::pi;

// |sigma_0| below this renders the relative error meaningless; relerr
// rows switch to absolute-error reporting there.
constexpr double kNearZeroThreshold = 1e-3;

std::string format_double(double v, int precision) {
    if (v == 0.0) v = 0.0;  // no "-0" cells
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, v);
    return buffer;
}

std::string render_csv(const ResultTable& table, int precision) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (const double* d = std::get_if<double>(&row[i]))
                out << format_double(*d, precision);
            else if (const std::string* s = std::get_if<std::string>(&row[i]))
                out << *s;
        }
        out << '\n';
    }
    return out.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string render_json(const ResultTable& table, int precision) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << "  {";
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ", ";
            out << '"' << json_escape(table.columns[i]) << "\": ";
            if (const double* d = std::get_if<double>(&row[i]))
                out << format_double(*d, precision);
            else if (const std::string* s = std::get_if<std::string>(&row[i]))
                out << '"' << json_escape(*s) << '"';
            else
                out << "null";
        }
        out << '}' << (r + 1 < table.rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return out.str();
}

std::string render_text(const ResultTable& table, int precision) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (const auto& cell : row) {
            if (const double* d = std::get_if<double>(&cell))
                line.push_back(format_double(*d, precision));
            else if (const std::string* s = std::get_if<std::string>(&cell))
                line.push_back(*s);
            else
                line.push_back("-");
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        width[i] = table.columns[i].size();
        for (const auto& line : cells)
            width[i] = std::max(width[i], line[i].size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << "  ";
        out << table.columns[i] << std::string(width[i] - table.columns[i].size(), ' ');
    }
    out << '\n';
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << "  ";
            out << line[i] << (i + 1 < line.size() ? std::string(width[i] - line[i].size(), ' ')
                                                   : std::string());
        }
        out << '\n';
    }
    return out.str();
}

bool is_semiclassical_tag(const std::string& m) {
    return m == "sharp" || m == "sharp_limit" || m == "exponential" ||
           m == "gaussian" || m == "wkb";
}

double grid_point(double start, double stop, int steps, int i) {
    if (i == steps - 1) return stop;  // keep the endpoint exact
    return start + (stop - start) * static_cast<double>(i) / (steps - 1);
}

}  // namespace

std::optional<Method> parse_method(const std::string& name) {
    if (name == "exact") return Method::ExactSum;
    if (name == "gudermann") return Method::ExactGudermann;
    if (name == "order0") return Method::Order0;
    if (name == "order1") return Method::Order1;
    if (name == "power_series" || name == "power") return Method::PowerSeries;
    if (name == "large_eta") return Method::LargeEta;
    if (name == "log_approx" || name == "log") return Method::LogApprox;
    return std::nullopt;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::ExactSum: return "exact";
        case Method::ExactGudermann: return "gudermann";
        case Method::Order0: return "order0";
        case Method::Order1: return "order1";
        case Method::PowerSeries: return "power_series";
        case Method::LargeEta: return "large_eta";
        case Method::LogApprox: return "log_approx";
    }
    return "unknown";
}

std::string render(const ResultTable& table, OutputFormat format, int precision) {
    if (precision < 1) precision = 1;
    switch (format) {
        case OutputFormat::Csv: return render_csv(table, precision);
        case OutputFormat::Json: return render_json(table, precision);
        case OutputFormat::Text: return render_text(table, precision);
    }
    return {};
}

void ScanSpec::validate() const {
    if (!(start < stop))
        throw std::invalid_argument("scan: requires start < stop");
    if (steps < 2)
        throw std::invalid_argument("scan: requires steps >= 2");
    if (methods.empty())
        throw std::invalid_argument("scan: at least one method required");
    for (const auto& m : methods) {
        const bool phase_scan = variable == ScanVariable::Eta || variable == ScanVariable::L;
        if (phase_scan) {
            if (!parse_method(m))
                throw std::invalid_argument("scan: unknown phase method '" + m + "'");
        } else if (variable == ScanVariable::Lambda) {
            if (m != "wkb" && m != "classical")
                throw std::invalid_argument("scan: method '" + m + "' not valid for lambda scans");
        } else {  // BOverA
            if (!is_semiclassical_tag(m) || m == "wkb")
                throw std::invalid_argument("scan: method '" + m + "' not valid for b_over_a scans");
        }
    }
    if (variable == ScanVariable::L && start < 0)
        throw std::invalid_argument("scan: l grid must be non-negative");
    if (variable == ScanVariable::BOverA && start <= 0)
        throw std::invalid_argument("scan: b/a grid must be positive");
}

ResultTable run_phase(PhaseQuery q, Method method, const EvalConfig& cfg) {
    const PhaseResult r = evaluate(q, method, cfg);
    const std::string tag = method_name(method);
    ResultTable table;
    table.columns = {"eta", "l", "sigma_" + tag, "sigma_" + tag + "_over_pi"};
    std::vector<CellValue> row{q.eta, static_cast<double>(q.l), r.sigma, r.sigma / kPi};
    if (r.error_bound) {
        table.columns.push_back("sigma_" + tag + "_error_bound");
        row.emplace_back(*r.error_bound);
    }
    if (r.terms_used) {
        table.columns.push_back("terms");
        row.emplace_back(static_cast<double>(*r.terms_used));
    }
    table.rows.push_back(std::move(row));
    return table;
}

ResultTable run_table(const EvalConfig& cfg) {
    ResultTable table;
    table.columns = {"eta", "l", "sigma_order0_over_pi", "sigma_order1_over_pi",
                     "sigma_exact_over_pi"};
    for (double eta : {0.1, 1.0}) {
        for (int l : {0, 1, 2}) {
            const PhaseQuery q{l, eta};
            table.rows.push_back({eta, static_cast<double>(l),
                                  sigma_l_order0(q).sigma / kPi,
                                  sigma_l_order1(q).sigma / kPi,
                                  sigma_l_exact(q, cfg).sigma / kPi});
        }
    }
    return table;
}

ResultTable run_scan(const ScanSpec& spec, const EvalConfig& cfg, std::ostream* diagnostics) {
    spec.validate();
    ResultTable table;

    const bool phase_scan =
        spec.variable == ScanVariable::Eta || spec.variable == ScanVariable::L;

    auto fixed_or = [&spec](const char* key, double fallback) {
        const auto it = spec.fixed.find(key);
        return it == spec.fixed.end() ? fallback : it->second;
    };

    switch (spec.variable) {
        case ScanVariable::Eta: table.columns = {"eta", "l"}; break;
        case ScanVariable::L: table.columns = {"eta", "l"}; break;
        case ScanVariable::Lambda: table.columns = {"lambda", "eta"}; break;
        case ScanVariable::BOverA: table.columns = {"b_over_a", "eta"}; break;
    }
    for (const auto& m : spec.methods) {
        const std::string prefix = m == "classical" ? "theta_" : "sigma_";
        table.columns.push_back(prefix + m);
        table.columns.push_back(prefix + m + "_over_pi");
    }

    for (int i = 0; i < spec.steps; ++i) {
        const double x = grid_point(spec.start, spec.stop, spec.steps, i);
        std::vector<CellValue> row;
        double eta = fixed_or("eta", 0.0);
        if (phase_scan) {
            int l = static_cast<int>(std::lround(fixed_or("l", 0.0)));
            if (spec.variable == ScanVariable::Eta)
                eta = x;
            else
                l = static_cast<int>(std::lround(x));
            row = {eta, static_cast<double>(l)};
            for (const auto& m : spec.methods) {
                try {
                    const PhaseResult r = evaluate({l, eta}, *parse_method(m), cfg);
                    row.emplace_back(r.sigma);
                    row.emplace_back(r.sigma / kPi);
                } catch (const std::domain_error& e) {
                    if (diagnostics)
                        *diagnostics << "warning: row " << i << " method " << m << ": "
                                     << e.what() << '\n';
                    row.emplace_back(std::monostate{});
                    row.emplace_back(std::monostate{});
                }
            }
        } else if (spec.variable == ScanVariable::Lambda) {
            row = {x, eta};
            for (const auto& m : spec.methods) {
                try {
                    const double v = m == "wkb" ? wkb_phase(x, eta)
                                                : deflection_classical(x, eta);
                    row.emplace_back(v);
                    row.emplace_back(v / kPi);
                } catch (const std::domain_error& e) {
                    if (diagnostics)
                        *diagnostics << "warning: row " << i << " method " << m << ": "
                                     << e.what() << '\n';
                    row.emplace_back(std::monostate{});
                    row.emplace_back(std::monostate{});
                }
            }
        } else {  // BOverA: screening phases depend only on the ratio; a = 1.
            row = {x, eta};
            for (const auto& m : spec.methods) {
                try {
                    double v = 0.0;
                    if (m == "sharp") v = eikonal_sharp(x, 1.0, eta);
                    else if (m == "sharp_limit") v = eikonal_sharp_limit(x, 1.0, eta);
                    else if (m == "exponential") v = eikonal_exponential(x, 1.0, eta);
                    else v = eikonal_gaussian(x, 1.0, eta);
                    row.emplace_back(v);
                    row.emplace_back(v / kPi);
                } catch (const std::domain_error& e) {
                    if (diagnostics)
                        *diagnostics << "warning: row " << i << " method " << m << ": "
                                     << e.what() << '\n';
                    row.emplace_back(std::monostate{});
                    row.emplace_back(std::monostate{});
                }
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ResultTable run_relerr(double eta_start, double eta_stop, int steps, const EvalConfig& cfg) {
    if (!(eta_start > 0.0) || !(eta_start < eta_stop))
        throw std::invalid_argument("relerr: requires 0 < eta_start < eta_stop");
    if (steps < 2)
        throw std::invalid_argument("relerr: requires steps >= 2");
    ResultTable table;
    table.columns = {"eta", "sigma0_exact", "sigma0_order1", "rel_err", "abs_err", "status"};
    for (int i = 0; i < steps; ++i) {
        const double eta = grid_point(eta_start, eta_stop, steps, i);
        const double exact = sigma0_exact(eta, cfg).sigma;
        const double order1 = sigma_l_order1({0, eta}).sigma;
        const double abs_err = order1 - exact;
        std::vector<CellValue> row{eta, exact, order1};
        if (std::abs(exact) < kNearZeroThreshold) {
            row.emplace_back(std::monostate{});
            row.emplace_back(abs_err);
            row.emplace_back(std::string("near-zero-denominator"));
        } else {
            row.emplace_back(abs_err / exact);
            row.emplace_back(abs_err);
            row.emplace_back(std::string("ok"));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ResultTable run_zero(const EvalConfig& cfg) {
    const double root = find_sigma0_zero(cfg);
    ResultTable table;
    table.columns = {"eta_star", "root_abs_tol"};
    table.rows.push_back({root, cfg.root_abs_tol});
    return table;
}

ResultTable run_deflection_classical(double lambda, double eta) {
    const double theta = deflection_classical(lambda, eta);
    ResultTable table;
    table.columns = {"mode", "lambda", "eta", "theta_rad", "theta_deg"};
    table.rows.push_back({std::string("classical"), lambda, eta, theta,
                          theta * 180.0 / kPi});
    return table;
}

ResultTable run_deflection_quantum(int l, double eta, const EvalConfig& cfg) {
    const double theta = deflection_quantum(l, eta, cfg);
    ResultTable table;
    table.columns = {"mode", "l", "eta", "theta_rad", "theta_deg"};
    table.rows.push_back({std::string("quantum"), static_cast<double>(l), eta,
                          theta, theta * 180.0 / kPi});
    return table;
}

ResultTable run_eikonal(const std::string& screening, double b, double a, double eta) {
    double sigma = 0.0;
    if (screening == "sharp") sigma = eikonal_sharp(b, a, eta);
    else if (screening == "sharp_limit") sigma = eikonal_sharp_limit(b, a, eta);
    else if (screening == "exponential") sigma = eikonal_exponential(b, a, eta);
    else if (screening == "gaussian") sigma = eikonal_gaussian(b, a, eta);
    else throw std::invalid_argument("eikonal: unknown screening '" + screening + "'");
    ResultTable table;
    table.columns = {"screening", "b", "a", "eta", "sigma", "sigma_over_pi"};
    table.rows.push_back({screening, b, a, eta, sigma, sigma / kPi});
    return table;
}

ResultTable run_wkb(double lambda, double eta) {
    const double sigma = wkb_phase(lambda, eta);
    ResultTable table;
    table.columns = {"lambda", "eta", "sigma_wkb", "sigma_wkb_over_pi"};
    table.rows.push_back({lambda, eta, sigma, sigma / kPi});
    return table;
}

}  // namespace coulphase
