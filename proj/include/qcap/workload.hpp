#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcap/model.hpp"

namespace qcap::workload {

// Calendar conventions: 365-day year, 30-day month.
inline constexpr double kDefaultYearSeconds = 31'536'000.0;
inline constexpr double kMonthSeconds = 2'592'000.0;

/// Execution-time bucket. Buckets are read literally: "lt-1s" holds times
/// strictly below one second, so a run of exactly 1 s lands in lt-1min.
enum class TimeBand { Lt1s, Lt1min, Lt1h, Lt1day, Lt1wk, Lt1mo, Lt1yr, Gt1yr };

std::string to_string(TimeBand band);

/// One cell of the application-by-system grid. exec_seconds and band are
/// absent when the application cannot run on the system.
struct RunEstimate {
    std::string app_id;
    std::string system_id;
    double total_cost = 0.0;
    std::optional<double> exec_seconds;
    std::optional<TimeBand> band;

    bool infeasible() const { return !exec_seconds.has_value(); }
};

struct SqspReport {
    std::string system_id;
    std::vector<std::string> suite; // app ids
    double value = 0.0;             // jobs/year; 0 iff a suite member is infeasible
};

/// Total gate cost C_tot = shots * n_gates.
double total_cost(const Application& app);

/// Execution time C_tot / f in seconds; independent of qubit count.
double exec_time(double cost, double clock_hz);

/// Bucket for an execution time; the year threshold follows year_seconds.
TimeBand band(double seconds, double year_seconds = kDefaultYearSeconds);

/// True when the application's gates fit the system's budget and, if the
/// system declares a qubit capacity, its qubits fit too.
bool feasible(const Application& app, const SystemSpec& sys);

/// Full cross product in (application, system) input order.
std::vector<RunEstimate> run_grid(std::span<const Application> apps,
                                  std::span<const SystemSpec> systems,
                                  double year_seconds = kDefaultYearSeconds);

/// Jobs per year at the given execution time.
double throughput(double exec_seconds, double year_seconds = kDefaultYearSeconds);

/// Geometric mean of per-application yearly throughputs, computed in log
/// space; zero when any suite member cannot run. Throws EmptySuite.
SqspReport sqsp(const SystemSpec& sys, std::span<const Application> suite,
                double year_seconds = kDefaultYearSeconds);

/// The subset of applications that can run on the system.
std::vector<Application> suite_for(const SystemSpec& sys, std::span<const Application> apps);

} // namespace qcap::workload
