#pragma once

#include <string>
#include <vector>

#include "qcap/estimators.hpp"
#include "qcap/model.hpp"
#include "qcap/normalize.hpp"
#include "qcap/workload.hpp"

namespace qcap::report {

/// Shortest decimal representation that round-trips the double exactly.
std::string fmt_double(double value);

/// RFC 4180 field quoting.
std::string csv_escape(const std::string& field);

std::string normalized_csv(const std::vector<normalize::NormalizedMilestone>& rows);
std::string normalized_json(const std::vector<normalize::NormalizedMilestone>& rows);

std::string frontier_csv(const std::vector<normalize::Frontier>& frontiers);
std::string frontier_json(const std::vector<normalize::Frontier>& frontiers);

std::string feasibility_csv(const std::vector<workload::RunEstimate>& grid);
std::string feasibility_json(const std::vector<workload::RunEstimate>& grid);

// Column order: app_id, system_id, total_cost, exec_seconds, band.
// Infeasible cells carry an empty exec_seconds and the band "infeasible".
std::string exec_time_csv(const std::vector<workload::RunEstimate>& grid);
std::string exec_time_json(const std::vector<workload::RunEstimate>& grid);

std::string sqsp_csv(const std::vector<workload::SqspReport>& reports);
std::string sqsp_json(const std::vector<workload::SqspReport>& reports);

struct NeutrinoReport {
    estimators::NeutrinoParams params;
    std::int64_t steps = 0;
    std::int64_t gates_per_step = 0;
    PVector pvec;
};

std::string neutrino_csv(const NeutrinoReport& r);
std::string neutrino_json(const NeutrinoReport& r);

/// Scatter point on the capability chart.
struct ChartPoint {
    std::string id;
    std::string technology;
    PVector pvec;
};

struct ChartOptions {
    double min_qubits = 1.0;
    double max_qubits = 1e6;
    double min_gates = 1.0;
    double max_gates = 1e16;
    int width = 880;
    int height = 640;
    bool draw_regions = true;
};

/// Log-log SVG chart: region bands, power-of-ten ticks, milestone markers,
/// one staircase path per frontier. Output is byte-stable for equal input.
std::string svg_chart(const std::vector<normalize::Frontier>& frontiers,
                      const std::vector<ChartPoint>& points, const ChartOptions& options = {});

} // namespace qcap::report
