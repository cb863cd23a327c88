#include "qcap/gates.hpp"

#include <stdexcept>

namespace qcap::gates {

double t_equivalent(const GateInventory& inv, const ConversionRatios& ratios) {
    if (inv.t_count < 0 || inv.toffoli_count < 0 || inv.rotation_count < 0)
        throw std::invalid_argument("t_equivalent: gate counts must be non-negative");
    return static_cast<double>(inv.t_count) + ratios.toffoli * static_cast<double>(inv.toffoli_count) +
           ratios.rotation * static_cast<double>(inv.rotation_count);
}

double circuit_fault_rate(double n_gates, double gate_error) {
    if (!(gate_error > 0.0) || gate_error > 1.0)
        throw std::invalid_argument("circuit_fault_rate: gate_error must be in (0, 1]");
    if (n_gates < 0.0)
        throw std::invalid_argument("circuit_fault_rate: n_gates must be non-negative");
    return n_gates * gate_error;
}

} // namespace qcap::gates
