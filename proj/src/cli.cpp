#include "qcap/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qcap/catalog.hpp"
#include "qcap/errors.hpp"
#include "qcap/estimators.hpp"
#include "qcap/report.hpp"

namespace qcap::cli {

namespace {

struct GlobalOptions {
    std::string catalog_path;
    bool no_bundled = false;
    std::string format;
    std::string out_path;
};

Catalog load_effective_catalog(const GlobalOptions& g) {
    std::string path = g.catalog_path;
    if (path.empty()) {
        if (const char* env = std::getenv("QCAP_CONFIG"))
            path = env;
    }
    if (path.empty()) {
        if (g.no_bundled)
            throw UsageError("--no-bundled requires --catalog or QCAP_CONFIG");
        return bundled_catalog();
    }
    return load_catalog(path, !g.no_bundled);
}

void emit(const GlobalOptions& g, std::ostream& out, const std::string& text) {
    if (g.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file '" + g.out_path + "'");
    file << text;
}

// Selection syntax: comma lists and inclusive ranges, e.g. "A..F", "1,3,5".
std::vector<std::string> expand_selection(const std::string& expr) {
    std::vector<std::string> out;
    std::stringstream ss(expr);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            if (!part.empty())
                out.push_back(part);
            continue;
        }
        const std::string lo = part.substr(0, dots);
        const std::string hi = part.substr(dots + 2);
        if (lo.size() == 1 && hi.size() == 1 && std::isalpha((unsigned char)lo[0]) &&
            std::isalpha((unsigned char)hi[0]) && lo[0] <= hi[0]) {
            for (char c = lo[0]; c <= hi[0]; ++c)
                out.push_back(std::string(1, c));
        } else {
            try {
                const long a = std::stol(lo);
                const long b = std::stol(hi);
                for (long v = a; v <= b; ++v)
                    out.push_back(std::to_string(v));
            } catch (const std::exception&) {
                throw UsageError("bad selection range '" + part + "'");
            }
        }
    }
    return out;
}

template <typename T>
std::vector<T> select_by_id(const std::vector<T>& all, const std::string& expr,
                            const std::string& kind) {
    if (expr.empty())
        return all;
    std::vector<T> out;
    for (const auto& id : expand_selection(expr)) {
        auto it = std::find_if(all.begin(), all.end(), [&](const T& e) { return e.id == id; });
        if (it == all.end())
            throw UsageError("unknown " + kind + " id '" + id + "'");
        out.push_back(*it);
    }
    return out;
}

std::vector<normalize::NormalizedMilestone> normalize_all(const Catalog& catalog) {
    std::vector<normalize::NormalizedMilestone> out;
    for (const auto& m : catalog.milestones) {
        if (!m.normalizable())
            continue;
        out.push_back(normalize::normalize_milestone(m, catalog.config.depth_density));
    }
    return out;
}

std::string pick_format(const GlobalOptions& g, const std::string& fallback,
                        const std::set<std::string>& allowed) {
    const std::string fmt = g.format.empty() ? fallback : g.format;
    if (!allowed.count(fmt)) {
        std::string msg = "unsupported format '" + fmt + "'; expected one of";
        for (const auto& a : allowed)
            msg += " " + a;
        throw UsageError(msg);
    }
    return fmt;
}

std::vector<report::ChartPoint> chart_points(const Catalog& catalog) {
    std::vector<report::ChartPoint> points;
    for (const auto& nm : normalize_all(catalog))
        points.push_back({nm.source.id(), to_string(vendor_technology(nm.source.vendor)),
                          nm.pvec});
    return points;
}

// -----------------------------------------------------------------------
// Commands

int cmd_catalog(const GlobalOptions& g, std::ostream& out) {
    const Catalog catalog = load_effective_catalog(g);
    const std::string fmt = pick_format(g, "yaml", {"yaml", "json"});
    emit(g, out,
         write_catalog(catalog, fmt == "yaml" ? CatalogFormat::Yaml : CatalogFormat::Json));
    return kExitOk;
}

int cmd_normalize(const GlobalOptions& g, std::ostream& out) {
    const Catalog catalog = load_effective_catalog(g);
    const auto rows = normalize_all(catalog);
    const std::string fmt = pick_format(g, "csv", {"csv", "json"});
    emit(g, out, fmt == "csv" ? report::normalized_csv(rows) : report::normalized_json(rows));
    return kExitOk;
}

int cmd_frontier(const GlobalOptions& g, std::vector<int> horizons, std::ostream& out) {
    const Catalog catalog = load_effective_catalog(g);
    if (horizons.empty())
        horizons = {2025, 2030, 2035};
    const auto rows = normalize_all(catalog);
    std::vector<normalize::Frontier> frontiers;
    for (int year : horizons)
        frontiers.push_back(normalize::frontier(rows, year));
    const std::string fmt = pick_format(g, "csv", {"csv", "json", "svg"});
    if (fmt == "svg") {
        emit(g, out, report::svg_chart(frontiers, chart_points(catalog)));
    } else if (fmt == "json") {
        emit(g, out, report::frontier_json(frontiers));
    } else {
        emit(g, out, report::frontier_csv(frontiers));
    }
    return kExitOk;
}

int cmd_feasibility(const GlobalOptions& g, const std::string& apps_expr,
                    const std::string& systems_expr, std::ostream& out) {
    const Catalog catalog = load_effective_catalog(g);
    const auto apps = select_by_id(catalog.applications, apps_expr, "application");
    const auto systems = select_by_id(catalog.systems, systems_expr, "system");
    const auto grid = workload::run_grid(apps, systems, catalog.config.year_seconds);
    const std::string fmt = pick_format(g, "csv", {"csv", "json"});
    emit(g, out, fmt == "csv" ? report::feasibility_csv(grid) : report::feasibility_json(grid));
    const bool any_feasible =
        std::any_of(grid.begin(), grid.end(), [](const auto& c) { return !c.infeasible(); });
    return any_feasible || grid.empty() ? kExitOk : kExitInfeasible;
}

int cmd_exec_time(const GlobalOptions& g, const std::string& apps_expr,
                  const std::string& systems_expr, std::ostream& out) {
    const Catalog catalog = load_effective_catalog(g);
    const auto apps = select_by_id(catalog.applications, apps_expr, "application");
    const auto systems = select_by_id(catalog.systems, systems_expr, "system");
    const auto grid = workload::run_grid(apps, systems, catalog.config.year_seconds);
    const std::string fmt = pick_format(g, "csv", {"csv", "json"});
    emit(g, out, fmt == "csv" ? report::exec_time_csv(grid) : report::exec_time_json(grid));
    const bool any_feasible =
        std::any_of(grid.begin(), grid.end(), [](const auto& c) { return !c.infeasible(); });
    return any_feasible || grid.empty() ? kExitOk : kExitInfeasible;
}

int cmd_sqsp(const GlobalOptions& g, const std::string& systems_expr,
             const std::string& suite_expr, std::ostream& out) {
    const Catalog catalog = load_effective_catalog(g);
    const auto systems = select_by_id(catalog.systems, systems_expr, "system");
    std::vector<workload::SqspReport> reports;
    for (const auto& sys : systems) {
        const auto suite = suite_expr.empty()
                               ? workload::suite_for(sys, catalog.applications)
                               : select_by_id(catalog.applications, suite_expr, "application");
        reports.push_back(workload::sqsp(sys, suite, catalog.config.year_seconds));
    }
    const std::string fmt = pick_format(g, "csv", {"csv", "json"});
    emit(g, out, fmt == "csv" ? report::sqsp_csv(reports) : report::sqsp_json(reports));
    return kExitOk;
}

int cmd_estimate_neutrino(const GlobalOptions& g, const estimators::NeutrinoParams& params,
                          std::ostream& out) {
    report::NeutrinoReport r;
    r.params = params;
    r.steps = estimators::trotter_steps(params);
    r.gates_per_step = estimators::gates_per_step(params.n_modes);
    r.pvec = estimators::neutrino_pvector(params);
    const std::string fmt = pick_format(g, "json", {"csv", "json"});
    emit(g, out, fmt == "csv" ? report::neutrino_csv(r) : report::neutrino_json(r));
    return kExitOk;
}

int cmd_plot(const GlobalOptions& g, std::vector<int> horizons, std::ostream& out) {
    const Catalog catalog = load_effective_catalog(g);
    if (horizons.empty())
        horizons = {2025, 2030, 2035};
    const auto rows = normalize_all(catalog);
    std::vector<normalize::Frontier> frontiers;
    for (int year : horizons)
        frontiers.push_back(normalize::frontier(rows, year));
    pick_format(g, "svg", {"svg"});
    emit(g, out, report::svg_chart(frontiers, chart_points(catalog)));
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum capability planning toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    GlobalOptions g;
    app.add_option("--catalog", g.catalog_path,
                   "Catalog file (YAML or JSON); QCAP_CONFIG is the fallback");
    app.add_flag("--no-bundled", g.no_bundled, "Do not merge the bundled datasets");
    app.add_option("--format", g.format, "Output format: csv, json, svg (command-dependent)");
    app.add_option("--out", g.out_path, "Write output to a file instead of stdout");

    auto* catalog_cmd = app.add_subcommand("catalog", "Print the effective catalog");
    auto* normalize_cmd =
        app.add_subcommand("normalize", "Convert milestones to classified P-vectors");

    std::vector<int> frontier_horizons;
    auto* frontier_cmd = app.add_subcommand("frontier", "Pareto capability frontiers");
    frontier_cmd->add_option("--horizon", frontier_horizons, "Horizon year (repeatable)");

    std::string apps_expr, systems_expr;
    auto* feas_cmd = app.add_subcommand("feasibility", "Which applications fit which systems");
    feas_cmd->add_option("--apps", apps_expr, "Application ids, e.g. A..F or A,C");
    feas_cmd->add_option("--systems", systems_expr, "System ids, e.g. 1..9 or 1,5");

    std::string et_apps, et_systems;
    auto* exec_cmd = app.add_subcommand("exec-time", "Execution times and time bands");
    exec_cmd->add_option("--apps", et_apps, "Application ids, e.g. A..F");
    exec_cmd->add_option("--systems", et_systems, "System ids, e.g. 1..9");

    std::string sq_systems, sq_suite;
    auto* sqsp_cmd = app.add_subcommand("sqsp", "Sustained system performance (jobs/year)");
    sqsp_cmd->add_option("--system,--systems", sq_systems, "System ids; default all");
    sqsp_cmd->add_option("--suite", sq_suite,
                         "Benchmark suite app ids; default: all apps that fit the system");

    estimators::NeutrinoParams np;
    double nu_time = 0.0, nu_spread = 0.0;
    auto* nu_cmd = app.add_subcommand("estimate-neutrino",
                                      "Trotter resource estimate for collective oscillations");
    nu_cmd->add_option("--modes", np.n_modes, "Number of neutrino modes")->check(CLI::PositiveNumber);
    nu_cmd->add_option("--error-budget", np.error_budget, "Total error budget");
    nu_cmd->add_option("--coupling", np.coupling, "Two-body coupling strength");
    nu_cmd->add_option("--time", nu_time, "Simulation time (default 1/coupling)");
    nu_cmd->add_option("--spread", nu_spread, "Max frequency spread (default 100*coupling)");
    nu_cmd->add_option("--constant", np.constant, "Big-O constant");

    std::vector<int> plot_horizons;
    auto* plot_cmd = app.add_subcommand("plot", "SVG capability chart");
    plot_cmd->add_option("--horizon", plot_horizons, "Horizon year (repeatable)");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "UsageError: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (catalog_cmd->parsed()) return cmd_catalog(g, out);
        if (normalize_cmd->parsed()) return cmd_normalize(g, out);
        if (frontier_cmd->parsed()) return cmd_frontier(g, frontier_horizons, out);
        if (feas_cmd->parsed()) return cmd_feasibility(g, apps_expr, systems_expr, out);
        if (exec_cmd->parsed()) return cmd_exec_time(g, et_apps, et_systems, out);
        if (sqsp_cmd->parsed()) return cmd_sqsp(g, sq_systems, sq_suite, out);
        if (nu_cmd->parsed()) {
            if (nu_time > 0.0) np.sim_time = nu_time;
            if (nu_spread > 0.0) np.freq_spread = nu_spread;
            return cmd_estimate_neutrino(g, np, out);
        }
        if (plot_cmd->parsed()) return cmd_plot(g, plot_horizons, out);
        err << "UsageError: no command given\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "Error: " << e.what() << "\n";
        return kExitValidation;
    }
}

} // namespace qcap::cli
