#include "qcap/workload.hpp"

#include <cmath>
#include <stdexcept>

#include "qcap/errors.hpp"

namespace qcap::workload {

std::string to_string(TimeBand band) {
    switch (band) {
    case TimeBand::Lt1s: return "lt-1s";
    case TimeBand::Lt1min: return "lt-1min";
    case TimeBand::Lt1h: return "lt-1h";
    case TimeBand::Lt1day: return "lt-1day";
    case TimeBand::Lt1wk: return "lt-1wk";
    case TimeBand::Lt1mo: return "lt-1mo";
    case TimeBand::Lt1yr: return "lt-1yr";
    case TimeBand::Gt1yr: return "gt-1yr";
    }
    return "?";
}

double total_cost(const Application& app) {
    return static_cast<double>(app.shots) * app.pvec.n_gates;
}

double exec_time(double cost, double clock_hz) {
    if (!(cost > 0.0))
        throw std::invalid_argument("exec_time: cost must be positive");
    if (!(clock_hz > 0.0))
        throw std::invalid_argument("exec_time: clock_hz must be positive");
    return cost / clock_hz;
}

TimeBand band(double seconds, double year_seconds) {
    if (!(seconds > 0.0))
        throw std::invalid_argument("band: seconds must be positive");
    if (seconds < 1.0) return TimeBand::Lt1s;
    if (seconds < 60.0) return TimeBand::Lt1min;
    if (seconds < 3600.0) return TimeBand::Lt1h;
    if (seconds < 86400.0) return TimeBand::Lt1day;
    if (seconds < 604800.0) return TimeBand::Lt1wk;
    if (seconds < kMonthSeconds) return TimeBand::Lt1mo;
    if (seconds < year_seconds) return TimeBand::Lt1yr;
    return TimeBand::Gt1yr;
}

bool feasible(const Application& app, const SystemSpec& sys) {
    if (app.pvec.n_gates > sys.max_gates)
        return false;
    if (sys.max_qubits && app.pvec.n_qubits > *sys.max_qubits)
        return false;
    return true;
}

std::vector<RunEstimate> run_grid(std::span<const Application> apps,
                                  std::span<const SystemSpec> systems, double year_seconds) {
    std::vector<RunEstimate> out;
    out.reserve(apps.size() * systems.size());
    for (const auto& app : apps) {
        for (const auto& sys : systems) {
            RunEstimate cell;
            cell.app_id = app.id;
            cell.system_id = sys.id;
            cell.total_cost = total_cost(app);
            if (feasible(app, sys)) {
                cell.exec_seconds = exec_time(cell.total_cost, sys.clock_hz);
                cell.band = band(*cell.exec_seconds, year_seconds);
            }
            out.push_back(std::move(cell));
        }
    }
    return out;
}

double throughput(double exec_seconds, double year_seconds) {
    if (!(exec_seconds > 0.0))
        throw std::invalid_argument("throughput: exec_seconds must be positive");
    return year_seconds / exec_seconds;
}

SqspReport sqsp(const SystemSpec& sys, std::span<const Application> suite, double year_seconds) {
    if (suite.empty())
        throw EmptySuite("SQSP needs a non-empty benchmark suite");
    SqspReport report;
    report.system_id = sys.id;
    double log_sum = 0.0;
    bool any_infeasible = false;
    for (const auto& app : suite) {
        report.suite.push_back(app.id);
        if (!feasible(app, sys)) {
            any_infeasible = true;
            continue;
        }
        log_sum += std::log(throughput(exec_time(total_cost(app), sys.clock_hz), year_seconds));
    }
    report.value = any_infeasible ? 0.0 : std::exp(log_sum / static_cast<double>(suite.size()));
    return report;
}

std::vector<Application> suite_for(const SystemSpec& sys, std::span<const Application> apps) {
    std::vector<Application> out;
    for (const auto& app : apps)
        if (feasible(app, sys))
            out.push_back(app);
    return out;
}

} // namespace qcap::workload
