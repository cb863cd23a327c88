#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "qcap/errors.hpp"
#include "qcap/workload.hpp"

using namespace qcap;
using namespace qcap::workload;

namespace {

Application app_by_id(const std::string& id) {
    for (const auto& app : bundled_workload())
        if (app.id == id)
            return app;
    throw std::runtime_error("no such app " + id);
}

SystemSpec system_by_id(const std::string& id) {
    for (const auto& sys : bundled_systems())
        if (sys.id == id)
            return sys;
    throw std::runtime_error("no such system " + id);
}

} // namespace

TEST_CASE("total_cost multiplies shots into gates") {
    CHECK(total_cost(app_by_id("A")) == doctest::Approx(1e7));
    CHECK(total_cost(app_by_id("D")) == doctest::Approx(1e14));
    Application single{"x", "x", PVector(10, 123.0), 1, DomainTag::Other};
    CHECK(total_cost(single) == doctest::Approx(123.0));
}

TEST_CASE("exec_time divides cost by clock") {
    CHECK(exec_time(1e7, 1e3) == doctest::Approx(1e4));
    CHECK(exec_time(1.0, 1.0) == doctest::Approx(1.0));
    CHECK(exec_time(1e14, 1e6) == doctest::Approx(1e8));
}

TEST_CASE("band thresholds are strict on the upper edge") {
    CHECK(band(0.5) == TimeBand::Lt1s);
    CHECK(band(1.0) == TimeBand::Lt1min); // exactly one second is not "<1s"
    CHECK(band(59.9) == TimeBand::Lt1min);
    CHECK(band(60.0) == TimeBand::Lt1h);
    CHECK(band(1e4) == TimeBand::Lt1day);
    CHECK(band(86400.0) == TimeBand::Lt1wk);
    CHECK(band(604800.0) == TimeBand::Lt1mo);
    CHECK(band(2591999.0) == TimeBand::Lt1mo);
    CHECK(band(2592000.0) == TimeBand::Lt1yr);
    CHECK(band(1e8) == TimeBand::Gt1yr);
    CHECK(band(31536000.0) == TimeBand::Gt1yr);
}

TEST_CASE("band is monotone non-decreasing in seconds") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> log_s(std::log(1e-3), std::log(1e9));
    for (int i = 0; i < 300; ++i) {
        const double a = std::exp(log_s(rng));
        const double b = std::exp(log_s(rng));
        const double lo = std::min(a, b), hi = std::max(a, b);
        CHECK(static_cast<int>(band(lo)) <= static_cast<int>(band(hi)));
    }
}

TEST_CASE("feasible compares gates and optional qubit capacity") {
    CHECK_FALSE(feasible(app_by_id("C"), system_by_id("1")));
    CHECK(feasible(app_by_id("A"), system_by_id("1")));

    // boundary inclusive
    Application edge{"x", "x", PVector(10, 1e6), 1, DomainTag::Other};
    CHECK(feasible(edge, system_by_id("1")));

    SystemSpec capped{"cap", 1e9, 1e6, 100};
    CHECK_FALSE(feasible(app_by_id("A"), capped)); // 200 qubits > 100
    Application small{"s", "s", PVector(100, 1e6), 1, DomainTag::Other};
    CHECK(feasible(small, capped));
}

TEST_CASE("run_grid reproduces the execution-time table") {
    const auto grid = run_grid(bundled_workload(), bundled_systems());
    REQUIRE(grid.size() == 54);

    std::map<std::pair<std::string, std::string>, std::string> bands;
    int infeasible_count = 0;
    for (const auto& cell : grid) {
        bands[{cell.app_id, cell.system_id}] =
            cell.band ? to_string(*cell.band) : "infeasible";
        if (cell.infeasible())
            ++infeasible_count;
    }
    CHECK(infeasible_count == 18);

    const std::map<std::string, std::vector<std::string>> expected = {
        {"A", {"lt-1day", "lt-1min", "lt-1s", "lt-1day", "lt-1min", "lt-1s", "lt-1day",
               "lt-1min", "lt-1s"}},
        {"B", {"lt-1mo", "lt-1h", "lt-1min", "lt-1mo", "lt-1h", "lt-1min", "lt-1mo", "lt-1h",
               "lt-1min"}},
        {"C", {"infeasible", "infeasible", "infeasible", "lt-1yr", "lt-1day", "lt-1min",
               "lt-1yr", "lt-1day", "lt-1min"}},
        {"D", {"infeasible", "infeasible", "infeasible", "gt-1yr", "gt-1yr", "lt-1wk", "gt-1yr",
               "gt-1yr", "lt-1wk"}},
        {"E", {"infeasible", "infeasible", "infeasible", "infeasible", "infeasible",
               "infeasible", "gt-1yr", "lt-1mo", "lt-1h"}},
        {"F", {"infeasible", "infeasible", "infeasible", "infeasible", "infeasible",
               "infeasible", "gt-1yr", "lt-1yr", "lt-1day"}},
    };
    for (const auto& [app, row] : expected)
        for (int sys = 1; sys <= 9; ++sys)
            CHECK(bands[{app, std::to_string(sys)}] == row[sys - 1]);
}

TEST_CASE("throughput is jobs per year") {
    CHECK(throughput(1e4) == doctest::Approx(3153.6));
    CHECK(throughput(kDefaultYearSeconds) == doctest::Approx(1.0));
}

TEST_CASE("sqsp frozen values") {
    const auto apps = bundled_workload();
    std::vector<Application> ab = {apps[0], apps[1]};
    const auto r1 = sqsp(system_by_id("1"), ab);
    CHECK(r1.value == doctest::Approx(315.36).epsilon(1e-9));

    const auto r7 = sqsp(system_by_id("7"), apps);
    CHECK(r7.value == doctest::Approx(0.46288517703729487).epsilon(1e-9));

    // a suite with an infeasible member scores zero
    const auto r1_full = sqsp(system_by_id("1"), apps);
    CHECK(r1_full.value == 0.0);

    CHECK_THROWS_AS(sqsp(system_by_id("1"), std::vector<Application>{}), EmptySuite);
}

TEST_CASE("sqsp equals year over the geometric mean of exec times") {
    const auto apps = bundled_workload();
    for (const auto& sys : bundled_systems()) {
        const auto suite = suite_for(sys, apps);
        if (suite.empty())
            continue;
        double log_sum = 0.0;
        for (const auto& app : suite)
            log_sum += std::log(total_cost(app) / sys.clock_hz);
        const double geomean = std::exp(log_sum / static_cast<double>(suite.size()));
        const double expected = kDefaultYearSeconds / geomean;
        const double actual = sqsp(sys, suite).value;
        CHECK(std::abs(actual - expected) / expected < 1e-12);
    }
}

TEST_CASE("sqsp is monotone in clock speed and in strong additions") {
    const auto apps = bundled_workload();
    const SystemSpec slow{"s", 1e12, 1e3, std::nullopt};
    const SystemSpec fast{"f", 1e12, 1e6, std::nullopt};
    CHECK(sqsp(slow, apps).value < sqsp(fast, apps).value);

    // adding a feasible app with above-geomean throughput raises the score
    std::vector<Application> base = {apps[3]}; // D, the slowest feasible app
    std::vector<Application> more = {apps[3], apps[0]};
    CHECK(sqsp(fast, more).value > sqsp(fast, base).value);
}

TEST_CASE("scaling exec times by k scales sqsp by 1/k") {
    const auto apps = bundled_workload();
    const SystemSpec sys{"x", 1e12, 1e6, std::nullopt};
    const SystemSpec sys_k{"xk", 1e12, 1e6 * 8.0, std::nullopt}; // k = 1/8 exec time
    const double a = sqsp(sys, apps).value;
    const double b = sqsp(sys_k, apps).value;
    CHECK(b / a == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("explicit suites follow the infeasible-scores-zero rule") {
    const auto apps = bundled_workload();
    std::vector<Application> ab = {apps[0], apps[1]};
    std::vector<Application> abc = {apps[0], apps[1], apps[2]};
    const auto sys1 = system_by_id("1");
    CHECK(sqsp(sys1, ab).value > 0.0);
    CHECK(sqsp(sys1, abc).value == 0.0); // C cannot run on a megaquop system
}

TEST_CASE("suite_for matches the megaquop/gigaquop/teraquop suites") {
    const auto apps = bundled_workload();
    auto ids = [](const std::vector<Application>& suite) {
        std::string out;
        for (const auto& app : suite)
            out += app.id;
        return out;
    };
    CHECK(ids(suite_for(system_by_id("1"), apps)) == "AB");
    CHECK(ids(suite_for(system_by_id("2"), apps)) == "AB");
    CHECK(ids(suite_for(system_by_id("3"), apps)) == "AB");
    CHECK(ids(suite_for(system_by_id("4"), apps)) == "ABCD");
    CHECK(ids(suite_for(system_by_id("5"), apps)) == "ABCD");
    CHECK(ids(suite_for(system_by_id("6"), apps)) == "ABCD");
    CHECK(ids(suite_for(system_by_id("7"), apps)) == "ABCDEF");
    CHECK(ids(suite_for(system_by_id("8"), apps)) == "ABCDEF");
    CHECK(ids(suite_for(system_by_id("9"), apps)) == "ABCDEF");
}

TEST_CASE("custom year length flows through band and throughput") {
    const double year = 5e6; // longer than a month, shorter than the default year
    CHECK(band(4e6, year) == TimeBand::Lt1yr);
    CHECK(band(5e6, year) == TimeBand::Gt1yr);
    CHECK(band(6e6, year) == TimeBand::Gt1yr);
    CHECK(throughput(5e5, year) == doctest::Approx(10.0));
}
