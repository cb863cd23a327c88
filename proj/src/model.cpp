#include "qcap/model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qcap {

PVector::PVector(std::int64_t qubits, double gates) : n_qubits(qubits), n_gates(gates) {
    if (qubits < 1)
        throw std::invalid_argument("PVector: n_qubits must be >= 1");
    if (!(gates >= 1.0))
        throw std::invalid_argument("PVector: n_gates must be >= 1");
}

std::string to_string(SystemType type) {
    switch (type) {
    case SystemType::N: return "N";
    case SystemType::EF: return "EF";
    case SystemType::F: return "F";
    }
    return "?";
}

std::optional<SystemType> parse_system_type(std::string_view text) {
    if (text == "N") return SystemType::N;
    if (text == "EF") return SystemType::EF;
    if (text == "F") return SystemType::F;
    return std::nullopt;
}

std::string to_string(TechnologyKind kind) {
    switch (kind) {
    case TechnologyKind::Superconducting: return "superconducting";
    case TechnologyKind::TrappedIon: return "trapped-ion";
    case TechnologyKind::NeutralAtom: return "neutral-atom";
    case TechnologyKind::Photonic: return "photonic";
    case TechnologyKind::Other: return "other";
    }
    return "other";
}

std::optional<TechnologyKind> parse_technology(std::string_view text) {
    if (text == "superconducting") return TechnologyKind::Superconducting;
    if (text == "trapped-ion") return TechnologyKind::TrappedIon;
    if (text == "neutral-atom") return TechnologyKind::NeutralAtom;
    if (text == "photonic") return TechnologyKind::Photonic;
    if (text == "other") return TechnologyKind::Other;
    return std::nullopt;
}

Technology default_technology(TechnologyKind kind) {
    switch (kind) {
    case TechnologyKind::Superconducting: return {kind, 1e5, 1e7};
    case TechnologyKind::TrappedIon: return {kind, 1e3, 1e6};
    case TechnologyKind::NeutralAtom: return {kind, 1e1, 1e5};
    case TechnologyKind::Photonic: return {kind, 1e8, 1e10};
    case TechnologyKind::Other: return {kind, 1.0, 1e12};
    }
    return {kind, 1.0, 1e12};
}

namespace {

std::string slugify(std::string_view text) {
    std::string out;
    bool pending_dash = false;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            if (pending_dash && !out.empty()) out.push_back('-');
            pending_dash = false;
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else {
            pending_dash = true;
        }
    }
    return out;
}

} // namespace

std::string Milestone::id() const {
    std::string out = slugify(vendor) + "-" + std::to_string(year);
    if (name) out += "-" + slugify(*name);
    return out;
}

Provenance Milestone::provenance(std::string_view field) const {
    for (const auto& f : inferred_fields)
        if (f == field) return Provenance::ReportInferred;
    return Provenance::VendorStated;
}

std::string to_string(DomainTag tag) {
    switch (tag) {
    case DomainTag::CondensedMatter: return "condensed-matter";
    case DomainTag::Chemistry: return "chemistry";
    case DomainTag::Hep: return "hep";
    case DomainTag::Other: return "other";
    }
    return "other";
}

std::optional<DomainTag> parse_domain_tag(std::string_view text) {
    if (text == "condensed-matter") return DomainTag::CondensedMatter;
    if (text == "chemistry") return DomainTag::Chemistry;
    if (text == "hep") return DomainTag::Hep;
    if (text == "other") return DomainTag::Other;
    return std::nullopt;
}

std::int64_t SamplingProfile::shots(UseCaseKind kind) const {
    switch (kind) {
    case UseCaseKind::GseeQpe: return gsee_qpe;
    case UseCaseKind::Observable: return observable;
    case UseCaseKind::MultiConfigDynamics: return multi_config_dynamics;
    }
    return gsee_qpe;
}

std::vector<Application> bundled_workload() {
    const SamplingProfile shots;
    return {
        {"A", "Condensed matter physics (static)", PVector(200, 1e6),
         shots.shots(UseCaseKind::GseeQpe), DomainTag::CondensedMatter},
        {"B", "Condensed matter physics (dynamics)", PVector(200, 1e6),
         shots.shots(UseCaseKind::Observable), DomainTag::CondensedMatter},
        {"C", "Quantum chemistry (static)", PVector(1000, 1e9),
         shots.shots(UseCaseKind::GseeQpe), DomainTag::Chemistry},
        {"D", "Quantum chemistry (dynamics)", PVector(1000, 1e9),
         shots.shots(UseCaseKind::MultiConfigDynamics), DomainTag::Chemistry},
        {"E", "Quantum chemistry (static, large system)", PVector(2000, 1e11),
         shots.shots(UseCaseKind::GseeQpe), DomainTag::Chemistry},
        {"F", "High energy physics (static)", PVector(250, 1e12),
         shots.shots(UseCaseKind::GseeQpe), DomainTag::Hep},
    };
}

std::vector<SystemSpec> bundled_systems() {
    std::vector<SystemSpec> out;
    int id = 1;
    for (double max_gates : {1e6, 1e9, 1e12})
        for (double clock : {1e3, 1e6, 1e9})
            out.push_back({std::to_string(id++), max_gates, clock, std::nullopt});
    return out;
}

namespace {

// Shorthand used only by the bundled table below.
struct Row {
    const char* vendor;
    int year;
    const char* name; // nullptr when the vendor lists none
    const char* type; // nullptr when unspecified
    std::int64_t phys;   // 0 = absent
    std::int64_t logical; // 0 = absent
    double error;        // 0 = absent
    double gates;        // 0 = absent
    double depth;        // 0 = absent
    double clock;        // 0 = absent
    const char* inferred; // comma-separated field names, nullptr = none
};

constexpr const char* kAliceBob = "Alice & Bob";
constexpr const char* kGoogle = "Google Quantum AI";
constexpr const char* kIbm = "IBM Quantum";
constexpr const char* kIqm = "IQM";
constexpr const char* kOqc = "Oxford Quantum Circuits";
constexpr const char* kRigetti = "Rigetti Computing";
constexpr const char* kIonq = "IonQ";
constexpr const char* kQuantinuum = "Quantinuum";
constexpr const char* kInfleqtion = "Infleqtion";
constexpr const char* kPasqal = "Pasqal";

const Row kRoadmapRows[] = {
    // Alice & Bob (cat qubits); Lithium/Beryllium dates interpolated by the report
    {kAliceBob, 2024, "Boson 4", "N", 1, 0, 0, 0, 0, 0, nullptr},
    {kAliceBob, 2025, "Helium", "EF", 16, 1, 1e-2, 0, 0, 0, nullptr},
    {kAliceBob, 2027, "Lithium", "EF", 48, 4, 1e-3, 0, 0, 0, "year"},
    {kAliceBob, 2029, "Beryllium", "EF", 250, 5, 1e-4, 0, 0, 0, "year"},
    {kAliceBob, 2030, "Graphene", "F", 2000, 100, 1e-6, 0, 0, 0, nullptr},
    // Google Quantum AI; milestone years extrapolated, logical counts estimated
    {kGoogle, 2019, "Sycamore", "N", 53, 0, 0, 0, 0, 0, nullptr},
    {kGoogle, 2023, "Sycamore-2", "N", 72, 0, 0, 0, 0, 0, nullptr},
    {kGoogle, 2024, "Willow", "N", 105, 0, 3e-3, 0, 0, 0, nullptr},
    {kGoogle, 2027, "Milestone 3", "EF", 1000, 5, 1e-6, 0, 0, 0, "year,n_logical"},
    {kGoogle, 2030, "Milestone 4", "EF", 10000, 50, 1e-6, 0, 0, 0, "year,n_logical"},
    {kGoogle, 2033, "Milestone 5", "F", 100000, 502, 1e-6, 0, 0, 0, "year,n_logical"},
    {kGoogle, 2036, "Milestone 6", "F", 1000000, 1545, 1e-13, 0, 0, 0, "year,n_logical"},
    // IBM Quantum; FTQC physical counts estimated from the gross-code ratio
    {kIbm, 2020, "Falcon", "N", 27, 0, 0, 0, 0, 0, nullptr},
    {kIbm, 2022, "Eagle", "N", 127, 0, 0, 0, 0, 0, nullptr},
    {kIbm, 2024, "Heron", "N", 133, 0, 0, 5000, 0, 0, nullptr},
    {kIbm, 2025, "Nighthawk", "N", 120, 0, 0, 5000, 0, 0, nullptr},
    {kIbm, 2026, "Nighthawk", "N", 120, 0, 0, 7500, 0, 0, nullptr},
    {kIbm, 2027, "Nighthawk", "N", 120, 0, 0, 10000, 0, 0, nullptr},
    {kIbm, 2028, "Nighthawk", "N", 120, 0, 0, 15000, 0, 0, nullptr},
    {kIbm, 2029, "Starling", "F", 8000, 200, 0, 1e8, 0, 0, "n_physical"},
    {kIbm, 2033, "Blue Jay", "F", 58000, 2000, 0, 1e9, 0, 0, "n_physical"},
    // IQM
    {kIqm, 2024, nullptr, "N", 54, 0, 1e-3, 0, 0, 0, nullptr},
    {kIqm, 2025, nullptr, "N", 150, 0, 8e-4, 0, 0, 0, nullptr},
    {kIqm, 2026, nullptr, "N", 300, 0, 6e-4, 0, 0, 0, nullptr},
    {kIqm, 2027, nullptr, "EF", 1000, 36, 1e-5, 0, 0, 0, nullptr},
    {kIqm, 2028, nullptr, "EF", 5000, 180, 1e-6, 0, 0, 0, nullptr},
    {kIqm, 2030, nullptr, "F", 40000, 720, 1e-7, 0, 0, 0, nullptr},
    {kIqm, 2031, nullptr, "F", 100000, 1800, 1e-8, 0, 0, 0, nullptr},
    {kIqm, 2033, nullptr, "F", 1000000, 7200, 1e-9, 0, 0, 0, nullptr},
    // Oxford Quantum Circuits
    {kOqc, 2021, "Sophia", "N", 4, 0, 0, 0, 0, 0, nullptr},
    {kOqc, 2022, "Lucy", "N", 8, 0, 0, 0, 0, 0, nullptr},
    {kOqc, 2024, "Toshiko", "N", 32, 0, 1e-2, 0, 0, 0, nullptr},
    {kOqc, 2025, "Genesis", "EF", 16, 16, 1e-3, 0, 0, 0, nullptr},
    {kOqc, 2028, "Titan", "EF", 2000, 200, 1e-6, 0, 0, 1e6, nullptr},
    {kOqc, 2031, "Athena", "F", 75000, 5000, 1e-9, 0, 0, 3e6, nullptr},
    {kOqc, 2034, "Atlas", "F", 1000000, 50000, 1e-12, 0, 0, 1e7, nullptr},
    // Rigetti Computing
    {kRigetti, 2022, "Aspen-M-X", "N", 80, 0, 5e-2, 0, 0, 0, nullptr},
    {kRigetti, 2023, "Ankaa-1", "N", 84, 0, 5e-2, 0, 0, 0, nullptr},
    {kRigetti, 2023, "Ankaa-2", "N", 84, 0, 2e-2, 0, 0, 0, nullptr},
    {kRigetti, 2024, "Ankaa-3", "N", 84, 0, 1e-2, 0, 0, 0, nullptr},
    {kRigetti, 2025, nullptr, "N", 108, 0, 5e-3, 0, 0, 0, nullptr},
    // IonQ
    {kIonq, 2025, nullptr, "N", 64, 0, 1e-4, 0, 0, 0, nullptr},
    {kIonq, 2026, nullptr, "EF", 256, 12, 1e-7, 0, 0, 0, nullptr},
    {kIonq, 2027, nullptr, "EF", 10000, 800, 1e-7, 0, 0, 0, nullptr},
    {kIonq, 2028, nullptr, "EF", 20000, 1600, 1e-7, 0, 0, 0, nullptr},
    {kIonq, 2029, nullptr, "F", 200000, 8000, 1e-12, 0, 0, 0, nullptr},
    {kIonq, 2030, nullptr, "F", 2000000, 80000, 1e-12, 0, 0, 0, nullptr},
    // Quantinuum; Apollo's "hundreds" of logical qubits stored as the 500 proxy
    {kQuantinuum, 2025, "Helios", "EF", 96, 50, 1e-4, 0, 0, 0, nullptr},
    {kQuantinuum, 2027, "Sol", "EF", 192, 100, 1e-5, 0, 0, 0, nullptr},
    {kQuantinuum, 2029, "Apollo", "F", 5000, 500, 1e-10, 0, 0, 0, "n_logical"},
    // Infleqtion (reports circuit depth for its EF milestones)
    {kInfleqtion, 2024, nullptr, "N", 1600, 2, 5e-3, 0, 0, 0, nullptr},
    {kInfleqtion, 2026, nullptr, "EF", 8000, 10, 0, 0, 1e3, 0, nullptr},
    {kInfleqtion, 2028, nullptr, "EF", 40000, 100, 0, 0, 1e6, 0, nullptr},
    // Pasqal; Orion-gamma is listed "N-EF", stored as EF; Lyra clock ">100 Hz"
    // stored as the 100 Hz lower bound
    {kPasqal, 2026, "Orion-gamma", "EF", 200, 2, 2e-2, 0, 0, 10, nullptr},
    {kPasqal, 2027, "Vela", "EF", 1000, 2, 1e-3, 0, 0, 10, nullptr},
    {kPasqal, 2028, "Centaurus", "EF", 1000, 20, 1e-3, 0, 0, 10, nullptr},
    {kPasqal, 2029, "Lyra", "F", 10000, 200, 1e-5, 0, 0, 100, nullptr},
};

std::vector<std::string> split_fields(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    std::string_view rest(csv);
    while (!rest.empty()) {
        auto pos = rest.find(',');
        out.emplace_back(rest.substr(0, pos));
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    return out;
}

} // namespace

std::vector<Milestone> bundled_milestones() {
    std::vector<Milestone> out;
    out.reserve(std::size(kRoadmapRows));
    for (const Row& r : kRoadmapRows) {
        Milestone m;
        m.vendor = r.vendor;
        m.year = r.year;
        if (r.name) m.name = r.name;
        if (r.type) m.declared_type = parse_system_type(r.type);
        if (r.phys > 0) m.n_physical = r.phys;
        if (r.logical > 0) m.n_logical = r.logical;
        if (r.error > 0) m.error_rate = r.error;
        if (r.gates > 0) m.n_gates = r.gates;
        if (r.depth > 0) m.circuit_depth = r.depth;
        if (r.clock > 0) m.clock_hz = r.clock;
        m.inferred_fields = split_fields(r.inferred);
        out.push_back(std::move(m));
    }
    return out;
}

TechnologyKind vendor_technology(std::string_view vendor) {
    if (vendor == kAliceBob || vendor == kGoogle || vendor == kIbm || vendor == kIqm ||
        vendor == kOqc || vendor == kRigetti)
        return TechnologyKind::Superconducting;
    if (vendor == kIonq || vendor == kQuantinuum)
        return TechnologyKind::TrappedIon;
    if (vendor == kInfleqtion || vendor == kPasqal)
        return TechnologyKind::NeutralAtom;
    return TechnologyKind::Other;
}

} // namespace qcap
