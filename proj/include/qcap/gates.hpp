#pragma once

#include <cstdint>

namespace qcap::gates {

// T-equivalents per gate kind. Exposed so future ratio revisions stay
// one-line edits (magic-state cultivation may change the T cost picture).
inline constexpr double kToffoliTRatio = 4.0;
inline constexpr double kRotationTRatio = 100.0;

struct GateInventory {
    std::int64_t t_count = 0;
    std::int64_t toffoli_count = 0;
    std::int64_t rotation_count = 0;
};

struct ConversionRatios {
    double toffoli = kToffoliTRatio;
    double rotation = kRotationTRatio;
};

/// Dominant-gate count in T-gate equivalents.
double t_equivalent(const GateInventory& inv, const ConversionRatios& ratios = {});

/// Overall circuit fault rate lambda = n_gates * gate_error.
/// gate_error must lie in (0, 1].
double circuit_fault_rate(double n_gates, double gate_error);

} // namespace qcap::gates
