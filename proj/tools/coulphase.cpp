// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.
//
// Command-line front end. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 2 usage or domain error, 3 convergence failure.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "coulphase/scan.hpp"

namespace {

using namespace coulphase;

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "text") return OutputFormat::Text;
    throw CLI::ValidationError("--format", "expected one of csv, json, text");
}

ScanVariable parse_variable(const std::string& name) {
    if (name == "eta") return ScanVariable::Eta;
    if (name == "l") return ScanVariable::L;
    if (name == "lambda") return ScanVariable::Lambda;
    if (name == "b_over_a") return ScanVariable::BOverA;
    throw CLI::ValidationError("--var", "expected one of eta, l, lambda, b_over_a");
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    for (char c : csv) {
        if (c == ',') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else {
            item.push_back(c);
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point-Coulomb scattering phase shifts: exact series, asymptotic "
                 "and semiclassical approximations"};
    app.require_subcommand(1);

    std::string format_name;
    int precision = 10;
    double tol = 1e-14;
    app.add_option("--format", format_name, "Output format: csv, json or text");
    app.add_option("--precision", precision, "Significant digits per numeric cell")
        ->check(CLI::Range(1, 17));
    app.add_option("--tol", tol, "Series truncation tolerance")
        ->envname("COULPHASE_TOL");

    int l = 0;
    double eta = 0.0, lambda = 1.0, b = 1.0, a = 1.0;
    std::string method_name_arg = "exact";
    std::string var_name = "eta";
    std::string methods_csv = "exact";
    std::string mode = "classical";
    std::string screening = "sharp";
    double start = 0.0, stop = 1.0;
    int steps = 2;
    double root_tol = 1e-10;

    CLI::App* cmd_phase = app.add_subcommand("phase", "One phase shift by a chosen method");
    cmd_phase->add_option("--l", l, "Angular momentum (integer >= 0)");
    cmd_phase->add_option("--eta", eta, "Sommerfeld parameter")->required();
    cmd_phase->add_option("--method", method_name_arg,
                          "exact, gudermann, order0, order1, power_series, large_eta, log_approx");

    CLI::App* cmd_table = app.add_subcommand(
        "table", "Reference table: eta in {0.1, 1} x l in {0, 1, 2}, values over pi");

    CLI::App* cmd_scan = app.add_subcommand("scan", "Evaluate methods over a parameter grid");
    cmd_scan->add_option("--var", var_name, "Grid variable: eta, l, lambda, b_over_a");
    cmd_scan->add_option("--start", start, "Grid start")->required();
    cmd_scan->add_option("--stop", stop, "Grid stop")->required();
    cmd_scan->add_option("--steps", steps, "Grid points (>= 2)")->required();
    cmd_scan->add_option("--methods", methods_csv, "Comma-separated method list");
    cmd_scan->add_option("--l", l, "Fixed l for eta scans");
    cmd_scan->add_option("--eta", eta, "Fixed eta for l/lambda/b_over_a scans");

    CLI::App* cmd_relerr = app.add_subcommand(
        "relerr", "Relative error of the first-order approximation over an eta grid");
    cmd_relerr->add_option("--start", start, "eta start (> 0)")->required();
    cmd_relerr->add_option("--stop", stop, "eta stop")->required();
    cmd_relerr->add_option("--steps", steps, "Grid points (>= 2)")->required();

    CLI::App* cmd_zero = app.add_subcommand("zero", "Positive zero of the s-wave phase shift");
    cmd_zero->add_option("--root-tol", root_tol, "Bracket width tolerance");

    CLI::App* cmd_deflection = app.add_subcommand("deflection", "Deflection function");
    cmd_deflection->add_option("--mode", mode, "classical or quantum");
    cmd_deflection->add_option("--lambda", lambda, "Angular momentum (classical mode)");
    cmd_deflection->add_option("--l", l, "Angular momentum (quantum mode, integer >= 1)");
    cmd_deflection->add_option("--eta", eta, "Sommerfeld parameter")->required();

    CLI::App* cmd_eikonal = app.add_subcommand("eikonal", "Eikonal phase with screening");
    cmd_eikonal->add_option("--screening", screening,
                            "sharp, sharp_limit, exponential or gaussian");
    cmd_eikonal->add_option("--b", b, "Impact parameter")->required();
    cmd_eikonal->add_option("--a", a, "Screening length")->required();
    cmd_eikonal->add_option("--eta", eta, "Sommerfeld parameter")->required();

    CLI::App* cmd_wkb = app.add_subcommand("wkb", "WKB phase shift");
    cmd_wkb->add_option("--lambda", lambda, "Semiclassical angular momentum (> 0)")->required();
    cmd_wkb->add_option("--eta", eta, "Sommerfeld parameter")->required();

    // Let --format/--precision/--tol appear after the subcommand name.
    for (CLI::App* sub : {cmd_phase, cmd_table, cmd_scan, cmd_relerr, cmd_zero,
                          cmd_deflection, cmd_eikonal, cmd_wkb})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    EvalConfig cfg;
    cfg.series_rel_tol = tol;

    try {
        cfg.validate();
        ResultTable table;
        OutputFormat format = OutputFormat::Text;
        if (app.got_subcommand(cmd_scan) || app.got_subcommand(cmd_relerr))
            format = OutputFormat::Csv;
        if (!format_name.empty()) format = parse_format(format_name);

        if (app.got_subcommand(cmd_phase)) {
            const auto method = parse_method(method_name_arg);
            if (!method) {
                std::cerr << "error: unknown method '" << method_name_arg << "'\n";
                return 2;
            }
            table = run_phase({l, eta}, *method, cfg);
        } else if (app.got_subcommand(cmd_table)) {
            table = run_table(cfg);
            // The reference table is a 4-significant-figure view unless the
            // user asks otherwise.
            if (app.count("--precision") == 0) precision = 4;
        } else if (app.got_subcommand(cmd_scan)) {
            ScanSpec spec;
            spec.variable = parse_variable(var_name);
            spec.start = start;
            spec.stop = stop;
            spec.steps = steps;
            spec.methods = split_list(methods_csv);
            if (cmd_scan->count("--l")) spec.fixed["l"] = l;
            if (cmd_scan->count("--eta")) spec.fixed["eta"] = eta;
            table = run_scan(spec, cfg, &std::cerr);
        } else if (app.got_subcommand(cmd_relerr)) {
            table = run_relerr(start, stop, steps, cfg);
        } else if (app.got_subcommand(cmd_zero)) {
            cfg.root_abs_tol = root_tol;
            cfg.validate();
            table = run_zero(cfg);
        } else if (app.got_subcommand(cmd_deflection)) {
            if (mode == "classical") {
                table = run_deflection_classical(lambda, eta);
            } else if (mode == "quantum") {
                if (cmd_deflection->count("--l") == 0 || l < 1) {
                    std::cerr << "error: quantum mode requires --l >= 1\n";
                    return 2;
                }
                table = run_deflection_quantum(l, eta, cfg);
            } else {
                std::cerr << "error: --mode must be classical or quantum\n";
                return 2;
            }
        } else if (app.got_subcommand(cmd_eikonal)) {
            table = run_eikonal(screening, b, a, eta);
        } else if (app.got_subcommand(cmd_wkb)) {
            table = run_wkb(lambda, eta);
        }

        std::cout << render(table, format, precision);
        return 0;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
