#include "qcap/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qcap::report {

using nlohmann::json;

std::string fmt_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc())
        return "0";
    return std::string(buf, ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

namespace {

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(fields[i]);
    }
    out.push_back('\n');
    return out;
}

std::string dump_json(const json& value) { return value.dump(2) + "\n"; }

} // namespace

std::string normalized_csv(const std::vector<normalize::NormalizedMilestone>& rows) {
    std::string out = csv_row({"id", "vendor", "year", "name", "type", "n_qubits", "n_gates",
                               "gates_rule"});
    for (const auto& nm : rows)
        out += csv_row({nm.source.id(), nm.source.vendor, std::to_string(nm.source.year),
                        nm.source.name.value_or(""), to_string(nm.effective_type),
                        std::to_string(nm.pvec.n_qubits), fmt_double(nm.pvec.n_gates),
                        to_string(nm.gates_rule_used)});
    return out;
}

std::string normalized_json(const std::vector<normalize::NormalizedMilestone>& rows) {
    json arr = json::array();
    for (const auto& nm : rows) {
        json obj;
        obj["id"] = nm.source.id();
        obj["vendor"] = nm.source.vendor;
        obj["year"] = nm.source.year;
        if (nm.source.name) obj["name"] = *nm.source.name;
        obj["type"] = to_string(nm.effective_type);
        obj["n_qubits"] = nm.pvec.n_qubits;
        obj["n_gates"] = nm.pvec.n_gates;
        obj["gates_rule"] = to_string(nm.gates_rule_used);
        arr.push_back(std::move(obj));
    }
    return dump_json(arr);
}

std::string frontier_csv(const std::vector<normalize::Frontier>& frontiers) {
    std::string out = csv_row({"horizon_year", "n_qubits", "n_gates"});
    for (const auto& f : frontiers)
        for (const auto& corner : f.corners)
            out += csv_row({std::to_string(f.horizon_year), std::to_string(corner.n_qubits),
                            fmt_double(corner.n_gates)});
    return out;
}

std::string frontier_json(const std::vector<normalize::Frontier>& frontiers) {
    json arr = json::array();
    for (const auto& f : frontiers) {
        json corners = json::array();
        for (const auto& corner : f.corners)
            corners.push_back({{"n_qubits", corner.n_qubits}, {"n_gates", corner.n_gates}});
        arr.push_back({{"horizon_year", f.horizon_year}, {"corners", std::move(corners)}});
    }
    return dump_json(arr);
}

std::string feasibility_csv(const std::vector<workload::RunEstimate>& grid) {
    std::string out = csv_row({"app_id", "system_id", "feasible"});
    for (const auto& cell : grid)
        out += csv_row({cell.app_id, cell.system_id, cell.infeasible() ? "false" : "true"});
    return out;
}

std::string feasibility_json(const std::vector<workload::RunEstimate>& grid) {
    json arr = json::array();
    for (const auto& cell : grid)
        arr.push_back({{"app_id", cell.app_id},
                       {"system_id", cell.system_id},
                       {"feasible", !cell.infeasible()}});
    return dump_json(arr);
}

std::string exec_time_csv(const std::vector<workload::RunEstimate>& grid) {
    std::string out = csv_row({"app_id", "system_id", "total_cost", "exec_seconds", "band"});
    for (const auto& cell : grid) {
        out += csv_row({cell.app_id, cell.system_id, fmt_double(cell.total_cost),
                        cell.exec_seconds ? fmt_double(*cell.exec_seconds) : "",
                        cell.band ? to_string(*cell.band) : "infeasible"});
    }
    return out;
}

std::string exec_time_json(const std::vector<workload::RunEstimate>& grid) {
    json arr = json::array();
    for (const auto& cell : grid) {
        json obj;
        obj["app_id"] = cell.app_id;
        obj["system_id"] = cell.system_id;
        obj["total_cost"] = cell.total_cost;
        if (cell.exec_seconds) {
            obj["exec_seconds"] = *cell.exec_seconds;
            obj["band"] = to_string(*cell.band);
        } else {
            obj["exec_seconds"] = nullptr;
            obj["band"] = "infeasible";
        }
        arr.push_back(std::move(obj));
    }
    return dump_json(arr);
}

namespace {

std::string join_suite(const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out.push_back('+');
        out += ids[i];
    }
    return out;
}

} // namespace

std::string sqsp_csv(const std::vector<workload::SqspReport>& reports) {
    std::string out = csv_row({"system_id", "suite", "sqsp_jobs_per_year"});
    for (const auto& r : reports)
        out += csv_row({r.system_id, join_suite(r.suite), fmt_double(r.value)});
    return out;
}

std::string sqsp_json(const std::vector<workload::SqspReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back({{"system_id", r.system_id},
                       {"suite", r.suite},
                       {"sqsp_jobs_per_year", r.value}});
    return dump_json(arr);
}

std::string neutrino_csv(const NeutrinoReport& r) {
    std::string out = csv_row({"n_modes", "trotter_steps", "gates_per_step", "n_qubits",
                               "n_gates", "note"});
    out += csv_row({std::to_string(r.params.n_modes), std::to_string(r.steps),
                    std::to_string(r.gates_per_step), std::to_string(r.pvec.n_qubits),
                    fmt_double(r.pvec.n_gates), "conservative bound"});
    return out;
}

std::string neutrino_json(const NeutrinoReport& r) {
    json obj;
    obj["n_modes"] = r.params.n_modes;
    obj["error_budget"] = r.params.error_budget;
    obj["coupling"] = r.params.coupling;
    obj["sim_time"] = r.params.time();
    obj["freq_spread"] = r.params.spread();
    obj["constant"] = r.params.constant;
    obj["trotter_steps"] = r.steps;
    obj["gates_per_step"] = r.gates_per_step;
    obj["n_qubits"] = r.pvec.n_qubits;
    obj["n_gates"] = r.pvec.n_gates;
    obj["note"] = "conservative bound";
    return dump_json(obj);
}

// ---------------------------------------------------------------------------
// SVG

namespace {

constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 50;

std::string fmt_px(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    if (ec != std::errc())
        return "0";
    return std::string(buf, ptr);
}

struct LogScale {
    double lo, hi;      // data domain
    double px0, px1;    // pixel range

    double operator()(double v) const {
        const double t = (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
        return px0 + t * (px1 - px0);
    }
};

} // namespace

std::string svg_chart(const std::vector<normalize::Frontier>& frontiers,
                      const std::vector<ChartPoint>& points, const ChartOptions& opt) {
    const double plot_x0 = kMarginLeft;
    const double plot_x1 = opt.width - kMarginRight;
    const double plot_y0 = opt.height - kMarginBottom; // y axis points up
    const double plot_y1 = kMarginTop;
    const LogScale sx{opt.min_qubits, opt.max_qubits, plot_x0, plot_x1};
    const LogScale sy{opt.min_gates, opt.max_gates, plot_y0, plot_y1};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
        << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n";
    svg << "<!-- generator: qcap -->\n";
    svg << "<style>\n"
           ".region-classically-simulable{fill:#fdf6d8;}\n"
           ".region-advantage{fill:#c9dcf4;}\n"
           ".region-impractical{fill:#f3c4bd;}\n"
           ".tick line{stroke:#999;stroke-width:0.5;}\n"
           ".tick text{font:10px sans-serif;fill:#333;}\n"
           ".frontier{fill:none;stroke:#1f4e8c;stroke-width:2;}\n"
           ".milestone{fill:#444;fill-opacity:0.7;}\n"
           ".axis-label{font:12px sans-serif;fill:#111;}\n"
           "</style>\n";

    auto rect = [&](double x0, double y0, double x1, double y1, const std::string& cls,
                    const std::string& extra) {
        svg << "<rect class=\"" << cls << "\" x=\"" << fmt_px(std::min(x0, x1)) << "\" y=\""
            << fmt_px(std::min(y0, y1)) << "\" width=\"" << fmt_px(std::abs(x1 - x0))
            << "\" height=\"" << fmt_px(std::abs(y1 - y0)) << "\"" << extra << "/>\n";
    };

    if (opt.draw_regions) {
        const auto regions = normalize::region_annotations();
        // background: everything not otherwise claimed is classically simulable
        rect(plot_x0, plot_y0, plot_x1, plot_y1, "region region-classically-simulable",
             " data-label=\"classically-simulable\"");
        for (const auto& r : regions) {
            if (r.label == "advantage") {
                rect(sx(static_cast<double>(*r.min_qubits)), sy(*r.min_gates), plot_x1,
                     sy(*r.max_gates), "region region-advantage",
                     " data-label=\"advantage\" data-corner-qubits=\"" +
                         fmt_double(static_cast<double>(*r.min_qubits)) +
                         "\" data-corner-gates=\"" + fmt_double(*r.min_gates) + "\"");
            } else if (r.label == "impractical") {
                rect(plot_x0, sy(*r.min_gates), plot_x1, plot_y1, "region region-impractical",
                     " data-label=\"impractical\" data-gate-floor=\"" + fmt_double(*r.min_gates) +
                         "\"");
            }
        }
    }

    // power-of-ten ticks
    svg << "<g class=\"axis axis-x\">\n";
    for (int k = static_cast<int>(std::ceil(std::log10(opt.min_qubits)));
         std::pow(10.0, k) <= opt.max_qubits * 1.000001; ++k) {
        const double v = std::pow(10.0, k);
        const double x = sx(v);
        svg << "<g class=\"tick\" data-axis=\"x\" data-value=\"" << fmt_double(v) << "\">"
            << "<line x1=\"" << fmt_px(x) << "\" y1=\"" << fmt_px(plot_y0) << "\" x2=\""
            << fmt_px(x) << "\" y2=\"" << fmt_px(plot_y1) << "\"/>"
            << "<text x=\"" << fmt_px(x) << "\" y=\"" << fmt_px(plot_y0 + 16)
            << "\" text-anchor=\"middle\">1e" << k << "</text></g>\n";
    }
    svg << "</g>\n<g class=\"axis axis-y\">\n";
    for (int k = static_cast<int>(std::ceil(std::log10(opt.min_gates)));
         std::pow(10.0, k) <= opt.max_gates * 1.000001; ++k) {
        const double v = std::pow(10.0, k);
        const double y = sy(v);
        svg << "<g class=\"tick\" data-axis=\"y\" data-value=\"" << fmt_double(v) << "\">"
            << "<line x1=\"" << fmt_px(plot_x0) << "\" y1=\"" << fmt_px(y) << "\" x2=\""
            << fmt_px(plot_x1) << "\" y2=\"" << fmt_px(y) << "\"/>"
            << "<text x=\"" << fmt_px(plot_x0 - 6) << "\" y=\"" << fmt_px(y + 3)
            << "\" text-anchor=\"end\">1e" << k << "</text></g>\n";
    }
    svg << "</g>\n";

    svg << "<text class=\"axis-label\" x=\"" << fmt_px((plot_x0 + plot_x1) / 2) << "\" y=\""
        << fmt_px(opt.height - 10) << "\" text-anchor=\"middle\">qubits</text>\n";
    svg << "<text class=\"axis-label\" x=\"16\" y=\"" << fmt_px((plot_y0 + plot_y1) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << fmt_px((plot_y0 + plot_y1) / 2) << ")\">gates</text>\n";

    svg << "<g class=\"milestones\">\n";
    for (const auto& p : points) {
        svg << "<circle class=\"milestone technology-" << p.technology << "\" cx=\""
            << fmt_px(sx(static_cast<double>(p.pvec.n_qubits))) << "\" cy=\""
            << fmt_px(sy(p.pvec.n_gates)) << "\" r=\"4\" data-id=\"" << p.id
            << "\" data-qubits=\"" << p.pvec.n_qubits << "\" data-gates=\""
            << fmt_double(p.pvec.n_gates) << "\"/>\n";
    }
    svg << "</g>\n";

    for (const auto& f : frontiers) {
        if (f.corners.empty())
            continue;
        std::ostringstream d;
        d << "M " << fmt_px(plot_x0) << " " << fmt_px(sy(f.corners.front().n_gates));
        for (std::size_t i = 0; i < f.corners.size(); ++i) {
            const auto& c = f.corners[i];
            d << " H " << fmt_px(sx(static_cast<double>(c.n_qubits)));
            const double next_gates = i + 1 < f.corners.size() ? f.corners[i + 1].n_gates : 0.0;
            d << " V " << fmt_px(i + 1 < f.corners.size() ? sy(next_gates) : plot_y0);
        }
        svg << "<path class=\"frontier\" data-horizon=\"" << f.horizon_year << "\" d=\""
            << d.str() << "\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace qcap::report
