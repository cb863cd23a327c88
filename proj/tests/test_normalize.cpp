#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qcap/errors.hpp"
#include "qcap/normalize.hpp"
#include "qcap/workload.hpp"

using namespace qcap;
using namespace qcap::normalize;

namespace {

Milestone make(const std::string& vendor, int year) {
    Milestone m;
    m.vendor = vendor;
    m.year = year;
    return m;
}

std::vector<NormalizedMilestone> normalized_bundled() {
    std::vector<NormalizedMilestone> out;
    for (const auto& m : bundled_milestones())
        if (m.normalizable())
            out.push_back(normalize_milestone(m));
    return out;
}

NormalizedMilestone synthetic(std::int64_t qubits, double gates, int year) {
    Milestone m = make("synthetic", year);
    m.n_physical = qubits;
    m.n_gates = gates;
    m.declared_type = SystemType::N;
    return {m, PVector(qubits, gates), SystemType::N, GatesRule::VendorStated};
}

} // namespace

TEST_CASE("gates_from_error inverts the error rate") {
    CHECK(gates_from_error(1e-4) == doctest::Approx(1e4));
    CHECK(gates_from_error(1.0) == doctest::Approx(1.0));
    CHECK(gates_from_error(1e-12) == doctest::Approx(1e12));
    CHECK_THROWS_AS(gates_from_error(0.0), std::invalid_argument);
    CHECK_THROWS_AS(gates_from_error(1.5), std::invalid_argument);
}

TEST_CASE("gates_from_depth under both density conventions") {
    CHECK(gates_from_depth(10, 1e3) == doctest::Approx(5e3));
    CHECK(gates_from_depth(100, 1e6) == doctest::Approx(5e7));
    CHECK(gates_from_depth(2, 1.0) == doctest::Approx(1.0));
    CHECK(gates_from_depth(100, 1e6, DepthDensity::ThreeQuarterLayer) == doctest::Approx(7.5e7));
    CHECK_THROWS_AS(gates_from_depth(10, 0.0), std::invalid_argument);
}

TEST_CASE("classify thresholds and declared override") {
    CHECK(classify(5e3) == SystemType::N);
    CHECK(classify(1e4) == SystemType::N);
    CHECK(classify(1e4 + 1) == SystemType::EF);
    CHECK(classify(1e6) == SystemType::EF);
    CHECK(classify(1e6 + 1) == SystemType::F);
    CHECK(classify(1e4, SystemType::EF) == SystemType::EF);
    CHECK(classify(1e12, SystemType::N) == SystemType::N);
}

TEST_CASE("normalize_milestone fixture rows") {
    Milestone starling = make("IBM Quantum", 2029);
    starling.name = "Starling";
    starling.declared_type = SystemType::F;
    starling.n_physical = 8000;
    starling.n_logical = 200;
    starling.n_gates = 1e8;
    const auto n1 = normalize_milestone(starling);
    CHECK(n1.pvec == PVector(200, 1e8));
    CHECK(n1.effective_type == SystemType::F);
    CHECK(n1.gates_rule_used == GatesRule::VendorStated);

    Milestone ionq27 = make("IonQ", 2027);
    ionq27.declared_type = SystemType::EF;
    ionq27.n_physical = 10000;
    ionq27.n_logical = 800;
    ionq27.error_rate = 1e-7;
    const auto n2 = normalize_milestone(ionq27);
    CHECK(n2.pvec == PVector(800, 1e7));
    CHECK(n2.gates_rule_used == GatesRule::FromError);

    Milestone sycamore = make("Google Quantum AI", 2019);
    sycamore.declared_type = SystemType::N;
    sycamore.n_physical = 53;
    CHECK_THROWS_AS(normalize_milestone(sycamore), NotNormalizable);
}

TEST_CASE("gate-count priority: stated gates beat error beat depth") {
    Milestone m = make("x", 2030);
    m.declared_type = SystemType::N;
    m.n_physical = 100;
    m.n_gates = 777.0;
    m.error_rate = 1e-3;
    m.circuit_depth = 10.0;
    CHECK(normalize_milestone(m).pvec.n_gates == doctest::Approx(777.0));
    CHECK(normalize_milestone(m).gates_rule_used == GatesRule::VendorStated);

    m.n_gates.reset();
    CHECK(normalize_milestone(m).pvec.n_gates == doctest::Approx(1000.0));
    CHECK(normalize_milestone(m).gates_rule_used == GatesRule::FromError);

    m.error_rate.reset();
    CHECK(normalize_milestone(m).pvec.n_gates == doctest::Approx(500.0));
    CHECK(normalize_milestone(m).gates_rule_used == GatesRule::FromDepth);
}

TEST_CASE("qubit coordinate follows the effective type") {
    Milestone m = make("x", 2030);
    m.n_physical = 1000;
    m.n_logical = 20;
    m.error_rate = 1e-3; // 1000 gates -> N
    CHECK(normalize_milestone(m).pvec.n_qubits == 1000);

    m.error_rate = 1e-5; // 1e5 gates -> EF
    CHECK(normalize_milestone(m).pvec.n_qubits == 20);

    m.n_logical.reset();
    CHECK_THROWS_AS(normalize_milestone(m), MissingQubitField);
}

TEST_CASE("bundled catalog normalizes to the expected fixtures") {
    const auto rows = normalized_bundled();
    CHECK(rows.size() == 50); // 57 rows minus 7 without a gate metric

    auto lookup = [&](const std::string& id) -> const NormalizedMilestone& {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const auto& nm) { return nm.source.id() == id; });
        REQUIRE(it != rows.end());
        return *it;
    };

    // vendor-declared type survives the thresholds
    const auto& helios = lookup("quantinuum-2025-helios");
    CHECK(helios.pvec == PVector(50, 1e4));
    CHECK(helios.effective_type == SystemType::EF);

    const auto& ionq30 = lookup("ionq-2030");
    CHECK(ionq30.pvec == PVector(80000, 1e12));
    CHECK(ionq30.effective_type == SystemType::F);

    const auto& willow = lookup("google-quantum-ai-2024-willow");
    CHECK(willow.pvec.n_qubits == 105);
    CHECK(willow.pvec.n_gates == doctest::Approx(1.0 / 3e-3));
    CHECK(willow.effective_type == SystemType::N);

    const auto& infleqtion26 = lookup("infleqtion-2026");
    CHECK(infleqtion26.pvec == PVector(10, 5e3));
    CHECK(infleqtion26.gates_rule_used == GatesRule::FromDepth);

    const auto& infleqtion28 = lookup("infleqtion-2028");
    CHECK(infleqtion28.pvec == PVector(100, 5e7));

    const auto& nighthawk28 = lookup("ibm-quantum-2028-nighthawk");
    CHECK(nighthawk28.pvec == PVector(120, 1.5e4));
    CHECK(nighthawk28.effective_type == SystemType::N);

    const auto& orion = lookup("pasqal-2026-orion-gamma");
    CHECK(orion.pvec == PVector(2, 50.0));
    CHECK(orion.effective_type == SystemType::EF);
}

TEST_CASE("full bundled normalization snapshot") {
    // hand-derived from the vendor tables: id -> qubits, gates, type, rule
    struct Expected {
        const char* id;
        std::int64_t qubits;
        double gates;
        SystemType type;
        GatesRule rule;
    };
    const GatesRule err = GatesRule::FromError;
    const GatesRule stated = GatesRule::VendorStated;
    const GatesRule depth = GatesRule::FromDepth;
    const Expected table[] = {
        {"alice-bob-2025-helium", 1, 100.0, SystemType::EF, err},
        {"alice-bob-2027-lithium", 4, 1000.0, SystemType::EF, err},
        {"alice-bob-2029-beryllium", 5, 1e4, SystemType::EF, err},
        {"alice-bob-2030-graphene", 100, 1e6, SystemType::F, err},
        {"google-quantum-ai-2024-willow", 105, 1.0 / 3e-3, SystemType::N, err},
        {"google-quantum-ai-2027-milestone-3", 5, 1e6, SystemType::EF, err},
        {"google-quantum-ai-2030-milestone-4", 50, 1e6, SystemType::EF, err},
        {"google-quantum-ai-2033-milestone-5", 502, 1e6, SystemType::F, err},
        {"google-quantum-ai-2036-milestone-6", 1545, 1e13, SystemType::F, err},
        {"ibm-quantum-2024-heron", 133, 5000.0, SystemType::N, stated},
        {"ibm-quantum-2025-nighthawk", 120, 5000.0, SystemType::N, stated},
        {"ibm-quantum-2026-nighthawk", 120, 7500.0, SystemType::N, stated},
        {"ibm-quantum-2027-nighthawk", 120, 1e4, SystemType::N, stated},
        {"ibm-quantum-2028-nighthawk", 120, 1.5e4, SystemType::N, stated},
        {"ibm-quantum-2029-starling", 200, 1e8, SystemType::F, stated},
        {"ibm-quantum-2033-blue-jay", 2000, 1e9, SystemType::F, stated},
        {"iqm-2024", 54, 1000.0, SystemType::N, err},
        {"iqm-2025", 150, 1250.0, SystemType::N, err},
        {"iqm-2026", 300, 1.0 / 6e-4, SystemType::N, err},
        {"iqm-2027", 36, 1e5, SystemType::EF, err},
        {"iqm-2028", 180, 1e6, SystemType::EF, err},
        {"iqm-2030", 720, 1e7, SystemType::F, err},
        {"iqm-2031", 1800, 1e8, SystemType::F, err},
        {"iqm-2033", 7200, 1e9, SystemType::F, err},
        {"oxford-quantum-circuits-2024-toshiko", 32, 100.0, SystemType::N, err},
        {"oxford-quantum-circuits-2025-genesis", 16, 1000.0, SystemType::EF, err},
        {"oxford-quantum-circuits-2028-titan", 200, 1e6, SystemType::EF, err},
        {"oxford-quantum-circuits-2031-athena", 5000, 1e9, SystemType::F, err},
        {"oxford-quantum-circuits-2034-atlas", 50000, 1e12, SystemType::F, err},
        {"rigetti-computing-2022-aspen-m-x", 80, 20.0, SystemType::N, err},
        {"rigetti-computing-2023-ankaa-1", 84, 20.0, SystemType::N, err},
        {"rigetti-computing-2023-ankaa-2", 84, 50.0, SystemType::N, err},
        {"rigetti-computing-2024-ankaa-3", 84, 100.0, SystemType::N, err},
        {"rigetti-computing-2025", 108, 200.0, SystemType::N, err},
        {"ionq-2025", 64, 1e4, SystemType::N, err},
        {"ionq-2026", 12, 1e7, SystemType::EF, err},
        {"ionq-2027", 800, 1e7, SystemType::EF, err},
        {"ionq-2028", 1600, 1e7, SystemType::EF, err},
        {"ionq-2029", 8000, 1e12, SystemType::F, err},
        {"ionq-2030", 80000, 1e12, SystemType::F, err},
        {"quantinuum-2025-helios", 50, 1e4, SystemType::EF, err},
        {"quantinuum-2027-sol", 100, 1e5, SystemType::EF, err},
        {"quantinuum-2029-apollo", 500, 1e10, SystemType::F, err},
        {"infleqtion-2024", 1600, 200.0, SystemType::N, err},
        {"infleqtion-2026", 10, 5000.0, SystemType::EF, depth},
        {"infleqtion-2028", 100, 5e7, SystemType::EF, depth},
        {"pasqal-2026-orion-gamma", 2, 50.0, SystemType::EF, err},
        {"pasqal-2027-vela", 2, 1000.0, SystemType::EF, err},
        {"pasqal-2028-centaurus", 20, 1000.0, SystemType::EF, err},
        {"pasqal-2029-lyra", 200, 1e5, SystemType::F, err},
    };

    const auto rows = normalized_bundled();
    REQUIRE(rows.size() == std::size(table));
    for (const auto& want : table) {
        CAPTURE(want.id);
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const auto& nm) { return nm.source.id() == want.id; });
        REQUIRE(it != rows.end());
        CHECK(it->pvec.n_qubits == want.qubits);
        CHECK(it->pvec.n_gates == doctest::Approx(want.gates).epsilon(1e-12));
        CHECK(it->effective_type == want.type);
        CHECK(it->gates_rule_used == want.rule);
    }
}

TEST_CASE("frontier basics") {
    std::vector<NormalizedMilestone> one = {synthetic(100, 1e6, 2024)};
    const auto f1 = frontier(one, 2025);
    REQUIRE(f1.corners.size() == 1);
    CHECK(f1.corners[0] == PVector(100, 1e6));

    std::vector<NormalizedMilestone> two = {synthetic(100, 1e6, 2024), synthetic(50, 1e4, 2024)};
    const auto f2 = frontier(two, 2025);
    REQUIRE(f2.corners.size() == 1);
    CHECK(f2.corners[0] == PVector(100, 1e6));

    CHECK_THROWS_AS(frontier(two, 2020), EmptyHorizon);
}

TEST_CASE("bundled frontier at 2030 is the IonQ teraquop corner") {
    const auto f = frontier(normalized_bundled(), 2030);
    REQUIRE(f.corners.size() == 1);
    CHECK(f.corners[0] == PVector(80000, 1e12));
}

TEST_CASE("bundled frontier at the end of 2025") {
    const auto f = frontier(normalized_bundled(), 2025);
    REQUIRE(f.corners.size() == 4);
    CHECK(f.corners[0] == PVector(64, 1e4));     // IonQ 2025
    CHECK(f.corners[1] == PVector(133, 5000.0)); // IBM Heron
    CHECK(f.corners[2] == PVector(150, 1250.0)); // IQM 2025
    CHECK(f.corners[3] == PVector(1600, 200.0)); // Infleqtion 2024
}

TEST_CASE("frontier is Pareto-clean, dominating, and monotone in horizon") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<std::int64_t> qubits(1, 10000);
    std::uniform_real_distribution<double> log_gates(0.0, std::log(1e12));
    std::uniform_int_distribution<int> year(2020, 2035);
    std::uniform_int_distribution<int> count(1, 40);

    for (int trial = 0; trial < 500; ++trial) {
        std::vector<NormalizedMilestone> rows;
        const int n = count(rng);
        for (int i = 0; i < n; ++i)
            rows.push_back(synthetic(qubits(rng), std::exp(log_gates(rng)), year(rng)));

        const auto f = frontier(rows, 2035);
        for (const auto& a : f.corners)
            for (const auto& b : f.corners)
                if (!(a == b))
                    CHECK_FALSE(a.dominated_by(b));
        for (const auto& nm : rows)
            CHECK(f.contains(nm.pvec));
        for (std::size_t i = 1; i < f.corners.size(); ++i)
            CHECK(f.corners[i - 1].n_qubits < f.corners[i].n_qubits);

        // earlier horizons are contained in later ones
        const int y1 = year(rng);
        const int y2 = std::min(2035, y1 + 3);
        const auto in_horizon = [&](int y) {
            return std::any_of(rows.begin(), rows.end(),
                               [&](const auto& nm) { return nm.source.year <= y; });
        };
        if (in_horizon(y1)) {
            const auto f1 = frontier(rows, y1);
            const auto f2 = frontier(rows, y2);
            for (const auto& corner : f1.corners)
                CHECK(f2.contains(corner));
        }
    }
}

TEST_CASE("normalized milestones can be analyzed as systems") {
    const auto rows = normalized_bundled();
    auto lookup = [&](const std::string& id) -> const NormalizedMilestone& {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const auto& nm) { return nm.source.id() == id; });
        REQUIRE(it != rows.end());
        return *it;
    };

    // Titan states a 1 MHz clock
    const auto titan = as_system_spec(lookup("oxford-quantum-circuits-2028-titan"));
    CHECK(titan.max_gates == doctest::Approx(1e6));
    CHECK(titan.max_qubits == 200);
    CHECK(titan.clock_hz == doctest::Approx(1e6));

    // Starling states none; superconducting low end is 100 kHz
    const auto starling = as_system_spec(lookup("ibm-quantum-2029-starling"));
    CHECK(starling.clock_hz == doctest::Approx(1e5));
    CHECK(starling.max_gates == doctest::Approx(1e8));

    // the qubit capacity now participates in feasibility
    const auto apps = bundled_workload();
    CHECK(qcap::workload::feasible(apps[0], starling));       // A: 200 qubits, 1e6 gates
    CHECK_FALSE(qcap::workload::feasible(apps[2], starling)); // C: 1000 qubits > 200
}

TEST_CASE("region annotations") {
    const auto regions = region_annotations();
    REQUIRE(regions.size() == 3);
    CHECK(regions[0].label == "classically-simulable");
    CHECK(regions[1].label == "advantage");
    REQUIRE(regions[1].min_qubits.has_value());
    CHECK(*regions[1].min_qubits == 50);
    CHECK(*regions[1].min_gates == doctest::Approx(1e6));
    CHECK(regions[2].label == "impractical");
    CHECK(*regions[2].min_gates == doctest::Approx(1e14));

    CHECK(region_label_of(PVector(10, 1e3)) == "classically-simulable");
    CHECK(region_label_of(PVector(50, 1e6)) == "advantage");
    CHECK(region_label_of(PVector(49, 1e8)) == "classically-simulable");
    CHECK(region_label_of(PVector(100, 1e15)) == "impractical");
}
