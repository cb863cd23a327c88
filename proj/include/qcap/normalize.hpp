#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcap/model.hpp"

namespace qcap::normalize {

// Gate-count classification thresholds: up to 1e4 reliable gates is NISQ,
// up to 1e6 early fault-tolerant, beyond that fault-tolerant.
inline constexpr double kNisqGateLimit = 1e4;
inline constexpr double kEarlyFtqcGateLimit = 1e6;

enum class GatesRule { VendorStated, FromError, FromDepth };

std::string to_string(GatesRule rule);

/// Circuit-depth-to-gates conventions. HalfQubitProduct is the applied rule
/// n_G = n_Q * d_C / 2; ThreeQuarterLayer is the alternate "maximally dense"
/// reading n_G = (3 * n_Q / 4) * d_C.
enum class DepthDensity { HalfQubitProduct, ThreeQuarterLayer };

std::string to_string(DepthDensity density);
std::optional<DepthDensity> parse_depth_density(std::string_view text);

struct NormalizedMilestone {
    Milestone source;
    PVector pvec;
    SystemType effective_type = SystemType::N;
    GatesRule gates_rule_used = GatesRule::VendorStated;
};

/// n_G = 1/error_rate, with error_rate in (0, 1].
double gates_from_error(double error_rate);

/// Gates equivalent of a circuit depth under the chosen density convention.
double gates_from_depth(std::int64_t n_qubits, double depth,
                        DepthDensity density = DepthDensity::HalfQubitProduct);

/// Vendor-declared type wins; otherwise thresholds on the gate count.
SystemType classify(double n_gates, std::optional<SystemType> declared = std::nullopt);

/// Convert a raw milestone to a classified P-vector. Gate-count priority:
/// vendor-stated gates, then error rate, then circuit depth. The qubit
/// coordinate is the physical count for NISQ systems and the logical count
/// otherwise. Throws NotNormalizable / MissingQubitField.
NormalizedMilestone normalize_milestone(const Milestone& m,
                                        DepthDensity density = DepthDensity::HalfQubitProduct);

/// Pareto-maximal capability set over milestones dated up to a horizon year.
struct Frontier {
    int horizon_year = 0;
    std::vector<PVector> corners; // n_qubits strictly ascending

    /// A point is within the frontier iff some corner dominates it.
    bool contains(const PVector& q) const;
};

/// Throws EmptyHorizon when no milestone falls within the horizon.
Frontier frontier(const std::vector<NormalizedMilestone>& milestones, int horizon_year);

/// View a normalized milestone as a machine for workload analysis: the gate
/// budget and qubit capacity come from its P-vector, the clock from the
/// milestone when stated, otherwise from the vendor technology's low end.
SystemSpec as_system_spec(const NormalizedMilestone& nm);

// Named plot regions. The advantage region starts at 50 qubits and 1e6
// gates; gate counts beyond 1e14 are impractical on a ten-year outlook.
inline constexpr std::int64_t kAdvantageMinQubits = 50;
inline constexpr double kAdvantageMinGates = 1e6;
inline constexpr double kImpracticalGateFloor = 1e14;

struct RegionAnnotation {
    std::string label;
    std::optional<std::int64_t> min_qubits;
    std::optional<double> min_gates; // exclusive for the impractical region
    std::optional<double> max_gates;
};

/// The three chart regions: classically-simulable, advantage, impractical.
std::vector<RegionAnnotation> region_annotations();

/// Region label for a point; impractical takes precedence over advantage.
std::string region_label_of(const PVector& point);

} // namespace qcap::normalize
