#include "qcap/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcap/errors.hpp"

namespace qcap::normalize {

std::string to_string(GatesRule rule) {
    switch (rule) {
    case GatesRule::VendorStated: return "vendor-stated";
    case GatesRule::FromError: return "from-error";
    case GatesRule::FromDepth: return "from-depth";
    }
    return "?";
}

std::string to_string(DepthDensity density) {
    switch (density) {
    case DepthDensity::HalfQubitProduct: return "half-qubit-product";
    case DepthDensity::ThreeQuarterLayer: return "three-quarter-layer";
    }
    return "?";
}

std::optional<DepthDensity> parse_depth_density(std::string_view text) {
    if (text == "half-qubit-product") return DepthDensity::HalfQubitProduct;
    if (text == "three-quarter-layer") return DepthDensity::ThreeQuarterLayer;
    return std::nullopt;
}

double gates_from_error(double error_rate) {
    if (!(error_rate > 0.0) || error_rate > 1.0)
        throw std::invalid_argument("gates_from_error: error_rate must be in (0, 1]");
    return 1.0 / error_rate;
}

double gates_from_depth(std::int64_t n_qubits, double depth, DepthDensity density) {
    if (n_qubits < 1)
        throw std::invalid_argument("gates_from_depth: n_qubits must be >= 1");
    if (!(depth > 0.0))
        throw std::invalid_argument("gates_from_depth: depth must be positive");
    switch (density) {
    case DepthDensity::HalfQubitProduct:
        return static_cast<double>(n_qubits) * depth / 2.0;
    case DepthDensity::ThreeQuarterLayer:
        return 0.75 * static_cast<double>(n_qubits) * depth;
    }
    throw std::logic_error("unknown depth density");
}

SystemType classify(double n_gates, std::optional<SystemType> declared) {
    if (declared)
        return *declared;
    if (n_gates <= kNisqGateLimit)
        return SystemType::N;
    if (n_gates <= kEarlyFtqcGateLimit)
        return SystemType::EF;
    return SystemType::F;
}

namespace {

// Qubit count feeding the depth rule. Declared type picks its own count;
// undeclared milestones prefer the logical count when present.
std::int64_t depth_rule_qubits(const Milestone& m) {
    if (m.declared_type == SystemType::N) {
        if (!m.n_physical)
            throw MissingQubitField(m.id() + ": NISQ depth conversion needs n_physical");
        return *m.n_physical;
    }
    if (m.declared_type) {
        if (!m.n_logical)
            throw MissingQubitField(m.id() + ": FTQC depth conversion needs n_logical");
        return *m.n_logical;
    }
    if (m.n_logical) return *m.n_logical;
    if (m.n_physical) return *m.n_physical;
    throw MissingQubitField(m.id() + ": no qubit count for depth conversion");
}

} // namespace

NormalizedMilestone normalize_milestone(const Milestone& m, DepthDensity density) {
    double gates = 0.0;
    GatesRule rule;
    if (m.n_gates) {
        gates = *m.n_gates;
        rule = GatesRule::VendorStated;
    } else if (m.error_rate) {
        gates = gates_from_error(*m.error_rate);
        rule = GatesRule::FromError;
    } else if (m.circuit_depth) {
        gates = gates_from_depth(depth_rule_qubits(m), *m.circuit_depth, density);
        rule = GatesRule::FromDepth;
    } else {
        throw NotNormalizable(m.id() + ": no gate count, error rate, or circuit depth");
    }

    const SystemType type = classify(gates, m.declared_type);
    std::optional<std::int64_t> qubits =
        type == SystemType::N ? m.n_physical : m.n_logical;
    if (!qubits)
        throw MissingQubitField(m.id() + ": type " + to_string(type) + " requires " +
                                (type == SystemType::N ? "n_physical" : "n_logical"));
    return {m, PVector(*qubits, gates), type, rule};
}

bool Frontier::contains(const PVector& q) const {
    return std::any_of(corners.begin(), corners.end(),
                       [&](const PVector& c) { return q.dominated_by(c); });
}

Frontier frontier(const std::vector<NormalizedMilestone>& milestones, int horizon_year) {
    std::vector<PVector> points;
    for (const auto& nm : milestones)
        if (nm.source.year <= horizon_year)
            points.push_back(nm.pvec);
    if (points.empty())
        throw EmptyHorizon("no milestone dated " + std::to_string(horizon_year) + " or earlier");

    std::vector<PVector> corners;
    for (const PVector& p : points) {
        const bool dominated = std::any_of(points.begin(), points.end(), [&](const PVector& q) {
            return p.dominated_by(q) && !(q == p);
        });
        if (!dominated && std::find(corners.begin(), corners.end(), p) == corners.end())
            corners.push_back(p);
    }
    std::sort(corners.begin(), corners.end(), [](const PVector& a, const PVector& b) {
        return a.n_qubits < b.n_qubits;
    });
    return {horizon_year, std::move(corners)};
}

SystemSpec as_system_spec(const NormalizedMilestone& nm) {
    SystemSpec sys;
    sys.id = nm.source.id();
    sys.max_gates = nm.pvec.n_gates;
    sys.max_qubits = nm.pvec.n_qubits;
    sys.clock_hz = nm.source.clock_hz.value_or(
        default_technology(vendor_technology(nm.source.vendor)).clock_low_hz);
    return sys;
}

std::vector<RegionAnnotation> region_annotations() {
    return {
        {"classically-simulable", std::nullopt, std::nullopt, std::nullopt},
        {"advantage", kAdvantageMinQubits, kAdvantageMinGates, kImpracticalGateFloor},
        {"impractical", std::nullopt, kImpracticalGateFloor, std::nullopt},
    };
}

std::string region_label_of(const PVector& point) {
    if (point.n_gates > kImpracticalGateFloor)
        return "impractical";
    if (point.n_qubits >= kAdvantageMinQubits && point.n_gates >= kAdvantageMinGates)
        return "advantage";
    return "classically-simulable";
}

} // namespace qcap::normalize
