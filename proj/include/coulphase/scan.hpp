// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coulphase/phase_shifts.hpp"

namespace coulphase {

enum class OutputFormat { Csv, Json, Text };

/// A rendered cell: empty (domain error at that grid point), a number, or
/// a status string.
using CellValue = std::variant<std::monostate, double, std::string>;

/// Column-ordered result set shared by every command. Rows carry one
/// CellValue per column; rendering applies the precision setting.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<CellValue>> rows;
};

enum class ScanVariable { Eta, L, Lambda, BOverA };

/// Batch evaluation request. `fixed` holds the non-scanned parameters by
/// name ("l", "eta"); `methods` lists the value columns to emit. Every
/// numeric method column is accompanied by a _over_pi column, plus an
/// _error_bound column where the route defines one.
struct ScanSpec {
    ScanVariable variable = ScanVariable::Eta;
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;  // >= 2
    std::map<std::string, double> fixed;
    std::vector<std::string> methods;

    /// Throws std::invalid_argument for an empty/invalid grid or methods
    /// not applicable to the scan variable.
    void validate() const;
};

/// Method tags accepted on the command line and in ScanSpec::methods for
/// phase-shift scans.
std::optional<Method> parse_method(const std::string& name);
std::string method_name(Method m);

/// Render with `precision` significant digits per numeric cell. CSV uses
/// comma separators, \n line endings and a header row; JSON is an array
/// of flat objects with identical keys; Text is an aligned table.
std::string render(const ResultTable& table, OutputFormat format, int precision);

// Command implementations. The CLI is a thin argument-parsing layer over
// these; they are exercised directly by the test suite.

/// One record for a single (l, eta, method) evaluation.
ResultTable run_phase(PhaseQuery q, Method method, const EvalConfig& cfg = {});

/// Six-row reference table: eta in {0.1, 1.0} x l in {0, 1, 2} with
/// columns sigma_order0/pi, sigma_order1/pi, sigma_exact/pi.
ResultTable run_table(const EvalConfig& cfg = {});

/// Grid scan. Rows appear in grid order regardless of evaluation order;
/// per-point domain errors become empty cells plus one warning line on
/// `diagnostics` (when non-null).
ResultTable run_scan(const ScanSpec& spec, const EvalConfig& cfg = {},
                     std::ostream* diagnostics = nullptr);

/// Relative error of the first-order approximation against the exact
/// s-wave phase over an eta grid. Where |sigma_0| < 1e-3 the relative
/// error is ill-conditioned: the rel_err cell is left empty and the
/// status column reads "near-zero-denominator".
ResultTable run_relerr(double eta_start, double eta_stop, int steps,
                       const EvalConfig& cfg = {});

/// Positive zero of sigma_0.
ResultTable run_zero(const EvalConfig& cfg = {});

/// Deflection function, classical (continuous lambda) or quantum
/// (integer l >= 1); reports radians and degrees.
ResultTable run_deflection_classical(double lambda, double eta);
ResultTable run_deflection_quantum(int l, double eta, const EvalConfig& cfg = {});

/// Eikonal phase for one of the screening functions
/// {"sharp", "sharp_limit", "exponential", "gaussian"}.
ResultTable run_eikonal(const std::string& screening, double b, double a, double eta);

/// WKB phase record.
ResultTable run_wkb(double lambda, double eta);

}  // namespace coulphase
