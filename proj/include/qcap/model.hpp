#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcap/errors.hpp"

namespace qcap {

/// Space-time figure of merit: qubit count and T-equivalent dominant-gate
/// count. Comparison is componentwise; dominated_by gives the partial order.
struct PVector {
    std::int64_t n_qubits = 1;
    double n_gates = 1.0;

    PVector() = default;
    PVector(std::int64_t qubits, double gates);

    // a <= b componentwise
    bool dominated_by(const PVector& other) const {
        return n_qubits <= other.n_qubits && n_gates <= other.n_gates;
    }

    friend bool operator==(const PVector&, const PVector&) = default;
};

enum class SystemType { N, EF, F };

std::string to_string(SystemType type);
std::optional<SystemType> parse_system_type(std::string_view text);

enum class TechnologyKind { Superconducting, TrappedIon, NeutralAtom, Photonic, Other };

std::string to_string(TechnologyKind kind);
std::optional<TechnologyKind> parse_technology(std::string_view text);

/// Hardware platform with its logical clock-speed range [low, high] in Hz.
struct Technology {
    TechnologyKind kind = TechnologyKind::Other;
    double clock_low_hz = 1.0;
    double clock_high_hz = 1e12;
};

/// Default clock range per platform (superconducting 100 kHz - 10 MHz,
/// trapped ions 1 kHz - 1 MHz, neutral atoms 10 Hz - 100 kHz, photonics
/// 100 MHz - 10 GHz; "other" spans the whole 1 Hz - 1 THz window).
Technology default_technology(TechnologyKind kind);

enum class Provenance { VendorStated, ReportInferred };

/// One vendor roadmap entry with the raw metrics as reported. Fields whose
/// values were inferred rather than vendor-stated are listed by name in
/// inferred_fields.
struct Milestone {
    std::string vendor;
    int year = 0;
    std::optional<std::string> name;
    std::optional<SystemType> declared_type;
    std::optional<std::int64_t> n_physical;
    std::optional<std::int64_t> n_logical;
    std::optional<double> error_rate;    // per-gate error in (0, 1]
    std::optional<double> n_gates;       // reliably executable gates
    std::optional<double> circuit_depth;
    std::optional<double> clock_hz;
    std::vector<std::string> inferred_fields;

    /// Stable identifier: slugified vendor-year[-name].
    std::string id() const;

    /// True when at least one gate-related metric is present. Milestones
    /// without one stay in the catalog but are skipped by normalization.
    bool normalizable() const {
        return error_rate.has_value() || n_gates.has_value() || circuit_depth.has_value();
    }

    Provenance provenance(std::string_view field) const;

    friend bool operator==(const Milestone&, const Milestone&) = default;
};

enum class DomainTag { CondensedMatter, Chemistry, Hep, Other };

std::string to_string(DomainTag tag);
std::optional<DomainTag> parse_domain_tag(std::string_view text);

/// Benchmark workload item.
struct Application {
    std::string id;
    std::string label;
    PVector pvec;
    std::int64_t shots = 1;
    DomainTag domain = DomainTag::Other;

    friend bool operator==(const Application&, const Application&) = default;
};

/// Machine configuration for throughput analysis. max_qubits absent means
/// qubit count is never the constraint.
struct SystemSpec {
    std::string id;
    double max_gates = 1.0;
    double clock_hz = 1.0;
    std::optional<std::int64_t> max_qubits;

    friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

enum class UseCaseKind { GseeQpe, Observable, MultiConfigDynamics };

/// Prototypical sampling complexities per use case.
struct SamplingProfile {
    std::int64_t gsee_qpe = 10;
    std::int64_t observable = 1000;
    std::int64_t multi_config_dynamics = 100000;

    std::int64_t shots(UseCaseKind kind) const;
};

/// The six-application benchmark workload (A-F).
std::vector<Application> bundled_workload();

/// The nine reference systems: max_gates in {1e6, 1e9, 1e12} crossed with
/// clock in {1 kHz, 1 MHz, 1 GHz}, ids "1".."9".
std::vector<SystemSpec> bundled_systems();

/// Every row of the ten vendor roadmap tables.
std::vector<Milestone> bundled_milestones();

/// Platform for a bundled vendor; Other for unknown vendors.
TechnologyKind vendor_technology(std::string_view vendor);

} // namespace qcap
