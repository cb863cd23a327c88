#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "qcap/codes.hpp"
#include "qcap/model.hpp"

namespace qcap::mitigation {

// PEC sampling overhead grows as e^(4*lambda); e^8 (~3000) is the cap the
// capability model deems practical, reached at lambda = 2.
inline const double kDefaultPecCap = std::exp(8.0);

// QEC+QEM: reducing the code distance by five holds the error rate at a
// sampling cost of at most 100.
inline constexpr double kQecQemOverheadCap = 100.0;
inline constexpr int kQecQemDistanceShift = 5;

struct PecBudget {
    double max_sampling_overhead = kDefaultPecCap; // >= 1
};

enum class Mechanism { NisqQem, FtqcQemQubits, FtqcQemGates };

std::string to_string(Mechanism mechanism);

/// A capability region unlocked by mitigation on top of a base P-vector.
/// The sampling-overhead cap is carried as metadata; callers opting in
/// multiply it into shot counts themselves.
struct ExtendedRegion {
    PVector base;
    PVector extended;
    Mechanism mechanism;
    double max_sampling_overhead = 1.0;
};

/// PEC sampling overhead e^(4 * fault_rate).
double pec_overhead(double fault_rate);

/// Gates runnable under a PEC overhead cap: ln(cap) / (4 * gate_error).
double pec_gate_budget(double overhead_cap, double gate_error);

/// NISQ extension: QEM at most doubles the gate count; the qubit count is
/// untouchable since every physical qubit is in use.
ExtendedRegion nisq_extended(const PVector& base);

/// FTQC gate-direction extension: at fixed distance d, QEC+QEM reaches error
/// rates of distance d+5, so the gate budget becomes 1/logical_error(d+5).
ExtendedRegion ftqc_qem_gate_region(const PVector& base, const codes::CodeModel& code,
                                    int distance);

/// FTQC qubit-direction extension: re-encode the same physical qubits at
/// distance d-5 (even results rounded up to the next odd distance) and
/// recount logical qubits. Throws DistanceTooSmall when d <= 5.
ExtendedRegion ftqc_qem_qubit_region(const PVector& base, const codes::CodeModel& code,
                                     int distance, std::int64_t n_physical);

struct FtqcExtended {
    std::optional<ExtendedRegion> qubit_region; // absent when d <= 5
    ExtendedRegion gate_region;
};

/// Both QEC+QEM regions for an FTQC milestone.
FtqcExtended ftqc_extended(const PVector& base, const codes::CodeModel& code, int distance,
                           std::int64_t n_physical);

} // namespace qcap::mitigation
