// Command-line front end: solve, validate and verify just-in-time schedules
// stored as JSON project files.
//
// Exit codes: 0 success, 1 infeasible (or failed validation/verification),
// 2 precondition or usage violation, 3 I/O or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropic/grid_search.hpp"
#include "tropic/project_io.hpp"
#include "tropic/scheduling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitParse = 3;

struct cli_error : std::runtime_error {
    int code;
    cli_error(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

tropic::anchor_policy parse_anchor(const std::string& s) {
    if (s == "earliest") return tropic::anchor_policy::earliest();
    const auto eq = s.find('=');
    if (eq != std::string::npos) {
        const std::string key = s.substr(0, eq);
        double v = 0;
        try {
            std::size_t used = 0;
            v = std::stod(s.substr(eq + 1), &used);
            if (used != s.size() - eq - 1) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw cli_error(kExitPrecondition, "--anchor: bad number in '" + s + "'");
        }
        if (key == "alpha") return tropic::anchor_policy::alpha(v);
        if (key == "due") return tropic::anchor_policy::due(v);
    }
    throw cli_error(kExitPrecondition,
                    "--anchor: expected alpha=<v>, due=<T> or earliest");
}

tropic::grid_spec parse_grid(const std::string& s) {
    tropic::grid_spec g;
    long long vals[3] = {0, 0, 1};
    int count = 0;
    std::size_t pos = 0;
    while (pos <= s.size() && count < 3) {
        const auto colon = s.find(':', pos);
        const std::string tok =
            s.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
        try {
            std::size_t used = 0;
            vals[count++] = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw cli_error(kExitPrecondition, "--grid: bad bound '" + tok + "'");
        }
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (count < 2)
        throw cli_error(kExitPrecondition, "--grid: expected lo:hi[:step]");
    g.lo = vals[0];
    g.hi = vals[1];
    g.step = vals[2];
    if (g.lo > g.hi || g.step <= 0)
        throw cli_error(kExitPrecondition, "--grid: need lo <= hi and step > 0");
    return g;
}

std::string fmt_num(double v) { return tropic::format_entry(v); }

void print_table(const tropic::schedule_report& r) {
    std::size_t w = 8;
    for (const auto& a : r.activities) w = std::max(w, a.size());
    std::printf("%-*s  %10s  %10s\n", static_cast<int>(w), "activity", "start",
                "finish");
    for (std::size_t i = 0; i < r.activities.size(); ++i)
        std::printf("%-*s  %10s  %10s\n", static_cast<int>(w),
                    r.activities[i].c_str(), fmt_num(r.start[i]).c_str(),
                    fmt_num(r.finish[i]).c_str());
    std::printf("\nspan: %s  alpha: %s  anchor: %s\n", fmt_num(r.span).c_str(),
                fmt_num(r.alpha).c_str(), r.anchor.c_str());
    std::printf("validation: %s\n",
                r.violations == 0 ? "ok" : std::to_string(r.violations).c_str());
}

void print_warnings(const tropic::solve_report& rep) {
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
}

// Turns a failed solve into the right exit code and message.
int report_failure(const tropic::solve_report& rep) {
    if (rep.infeasible) {
        std::cerr << "infeasible: start-start constraints admit no schedule "
                     "(a cycle of "
                  << rep.infeasible->cycle_length
                  << " activities has positive total lag "
                  << fmt_num(rep.infeasible->cycle_trace) << ")\n";
        return kExitInfeasible;
    }
    if (rep.irregular) {
        std::cerr << "invalid project: activity '" << rep.irregular->label
                  << "' has no start-finish lag in "
                  << (rep.irregular->zero_row ? "any row (no constraint completes it)"
                                              : "any column (it constrains nothing)")
                  << "\n";
        return kExitPrecondition;
    }
    std::cerr << "solve failed for an unknown reason\n";
    return kExitPrecondition;
}

int cmd_solve(const std::string& project_path, bool ignore_start_start,
              const std::string& anchor_arg, const std::string& format,
              const std::string& out_path) {
    const tropic::project p = tropic::load_project_file(project_path);
    const tropic::anchor_policy pol = parse_anchor(anchor_arg);
    const tropic::solve_report rep = tropic::solve_project(p, !ignore_start_start);
    print_warnings(rep);
    if (!rep.ok()) return report_failure(rep);
    const tropic::schedule s = tropic::anchor(*rep.family, pol);
    const tropic::validation_report v = tropic::validate(p, s);
    const tropic::schedule_report report = tropic::make_report(p, s, pol, v);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw cli_error(kExitParse, out_path + ": cannot open for writing");
        out << tropic::report_to_json(report).dump(2) << "\n";
    }
    if (format == "structured")
        std::cout << tropic::report_to_json(report).dump(2) << "\n";
    else
        print_table(report);
    return v.ok() ? kExitOk : kExitInfeasible;
}

int cmd_validate(const std::string& project_path, const std::string& schedule_path) {
    const tropic::project p = tropic::load_project_file(project_path);
    const tropic::schedule_report r = tropic::load_report_file(schedule_path);
    tropic::schedule s{tropic::matrix<tropic::max_plus>(1, 1),
                       tropic::matrix<tropic::max_plus>(1, 1),
                       tropic::value<tropic::max_plus>(0), 0};
    try {
        s = tropic::report_to_schedule(r, p);
    } catch (const std::invalid_argument& e) {
        throw cli_error(kExitPrecondition, e.what());
    }
    const tropic::validation_report v = tropic::validate(p, s);
    if (v.ok()) {
        std::cout << "valid: all constraints hold, span "
                  << fmt_num(tropic::span(s.finish).raw()) << "\n";
        return kExitOk;
    }
    for (const auto& viol : v.violations) {
        switch (viol.what) {
            case tropic::violation::kind::completion_mismatch:
                std::cout << "violation: activity '" << p.activities[viol.index]
                          << "' completes at " << fmt_num(viol.actual)
                          << " but its tightest lag gives " << fmt_num(viol.expected)
                          << "\n";
                break;
            case tropic::violation::kind::start_lag_violated:
                std::cout << "violation: activity '" << p.activities[viol.index]
                          << "' starts at " << fmt_num(viol.actual)
                          << " before its start-start bound " << fmt_num(viol.expected)
                          << "\n";
                break;
            case tropic::violation::kind::span_mismatch:
                std::cout << "violation: reported span " << fmt_num(viol.actual)
                          << " differs from actual " << fmt_num(viol.expected) << "\n";
                break;
        }
    }
    std::cout << v.violations.size() << " violation(s)\n";
    return kExitInfeasible;
}

int cmd_verify(const std::string& project_path, bool ignore_start_start,
               const std::string& grid_arg) {
    const tropic::project p = tropic::load_project_file(project_path);
    const tropic::grid_spec g = parse_grid(grid_arg);
    const bool constrained = !ignore_start_start && p.start_start.has_value();
    const tropic::solve_report rep = tropic::solve_project(p, !ignore_start_start);
    print_warnings(rep);
    if (!rep.ok()) return report_failure(rep);
    tropic::grid_result gr;
    try {
        gr = tropic::grid_min_span(
            p.start_finish,
            constrained ? p.start_start : std::optional<tropic::matrix<tropic::max_plus>>{},
            g);
    } catch (const std::invalid_argument& e) {
        throw cli_error(kExitPrecondition,
                        std::string(e.what()) + " (try a tighter --grid)");
    }
    const double analytic = rep.family->min_span.raw();
    std::cout << "analytic span: " << fmt_num(analytic) << "\n";
    if (!gr.feasible) {
        std::cout << "grid search: no feasible point in the grid\n";
        std::cout << "verdict: inconclusive (grid too small)\n";
        return kExitInfeasible;
    }
    std::cout << "grid search minimum: " << gr.best << " at x = (";
    for (std::size_t i = 0; i < gr.argmin.size(); ++i)
        std::cout << (i ? ", " : "") << gr.argmin[i];
    std::cout << ")\n";
    const bool match = static_cast<double>(gr.best) == analytic;
    std::cout << "verdict: " << (match ? "match" : "MISMATCH") << "\n";
    return match ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical span-minimizing scheduler for just-in-time projects"};
    app.require_subcommand(1);

    std::string project_path, schedule_path, out_path;
    std::string anchor_arg = "earliest";
    std::string format = "table";
    std::string grid_arg = "-15:15:1";
    bool ignore_start_start = false;

    auto* solve = app.add_subcommand(
        "solve", "compute a minimum-span schedule for a project file");
    solve->add_option("project", project_path, "project JSON file")->required();
    solve->add_flag("--ignore-start-start", ignore_start_start,
                    "drop start-start constraints before solving");
    solve->add_option("--anchor", anchor_arg,
                      "alpha=<v>, due=<T> or earliest (default earliest)");
    solve->add_option("--format", format, "table or structured")
        ->check(CLI::IsMember({"table", "structured"}));
    solve->add_option("-o,--output", out_path, "also write the report JSON here");

    auto* validate = app.add_subcommand(
        "validate", "check a schedule report against a project file");
    validate->add_option("project", project_path, "project JSON file")->required();
    validate->add_option("schedule", schedule_path, "schedule report JSON file")
        ->required();

    auto* verify = app.add_subcommand(
        "verify", "cross-check the solver against brute-force grid search");
    verify->add_option("project", project_path, "project JSON file")->required();
    verify->add_flag("--ignore-start-start", ignore_start_start,
                     "drop start-start constraints");
    verify->add_option("--grid", grid_arg, "lo:hi[:step] (default -15:15:1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        app.exit(e);
        return kExitPrecondition;
    }

    try {
        if (solve->parsed())
            return cmd_solve(project_path, ignore_start_start, anchor_arg, format,
                             out_path);
        if (validate->parsed()) return cmd_validate(project_path, schedule_path);
        if (verify->parsed())
            return cmd_verify(project_path, ignore_start_start, grid_arg);
    } catch (const cli_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const tropic::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const tropic::span_precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitPrecondition;
}
