#include "qcap/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcap/errors.hpp"

namespace qcap::mitigation {

std::string to_string(Mechanism mechanism) {
    switch (mechanism) {
    case Mechanism::NisqQem: return "nisq-qem";
    case Mechanism::FtqcQemQubits: return "ftqc-qem-qubits";
    case Mechanism::FtqcQemGates: return "ftqc-qem-gates";
    }
    return "?";
}

double pec_overhead(double fault_rate) {
    if (fault_rate < 0.0)
        throw std::invalid_argument("pec_overhead: fault_rate must be non-negative");
    return std::exp(4.0 * fault_rate);
}

double pec_gate_budget(double overhead_cap, double gate_error) {
    if (overhead_cap < 1.0)
        throw std::invalid_argument("pec_gate_budget: overhead_cap must be >= 1");
    if (!(gate_error > 0.0) || gate_error > 1.0)
        throw std::invalid_argument("pec_gate_budget: gate_error must be in (0, 1]");
    return std::log(overhead_cap) / (4.0 * gate_error);
}

ExtendedRegion nisq_extended(const PVector& base) {
    return {base, PVector(base.n_qubits, 2.0 * base.n_gates), Mechanism::NisqQem, kDefaultPecCap};
}

ExtendedRegion ftqc_qem_gate_region(const PVector& base, const codes::CodeModel& code,
                                    int distance) {
    const double err = codes::logical_error(code, distance + kQecQemDistanceShift);
    // clamped so the region always contains its base
    const double gates = std::max(base.n_gates, 1.0 / err);
    return {base, PVector(base.n_qubits, gates), Mechanism::FtqcQemGates, kQecQemOverheadCap};
}

namespace {

int clamp_to_odd(int distance) {
    return distance % 2 == 0 ? distance + 1 : distance;
}

} // namespace

ExtendedRegion ftqc_qem_qubit_region(const PVector& base, const codes::CodeModel& code,
                                     int distance, std::int64_t n_physical) {
    if (distance <= kQecQemDistanceShift)
        throw DistanceTooSmall("distance " + std::to_string(distance) +
                               " leaves no room for a " + std::to_string(kQecQemDistanceShift) +
                               "-step reduction");
    if (n_physical < 1)
        throw std::invalid_argument("n_physical must be >= 1");
    const int reduced = clamp_to_odd(distance - kQecQemDistanceShift);
    const double per_logical = codes::physical_per_logical(code, reduced);
    const double ratio = static_cast<double>(n_physical) / per_logical;
    const auto recount = static_cast<std::int64_t>(std::floor(ratio + std::abs(ratio) * 1e-12));
    const std::int64_t qubits = std::max(base.n_qubits, recount);
    return {base, PVector(qubits, base.n_gates), Mechanism::FtqcQemQubits, kQecQemOverheadCap};
}

FtqcExtended ftqc_extended(const PVector& base, const codes::CodeModel& code, int distance,
                           std::int64_t n_physical) {
    FtqcExtended out{std::nullopt, ftqc_qem_gate_region(base, code, distance)};
    if (distance > kQecQemDistanceShift)
        out.qubit_region = ftqc_qem_qubit_region(base, code, distance, n_physical);
    return out;
}

} // namespace qcap::mitigation
