#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qcap/model.hpp"
#include "qcap/normalize.hpp"
#include "qcap/workload.hpp"

namespace qcap {

/// Model overrides carried by a catalog file.
struct Config {
    double year_seconds = workload::kDefaultYearSeconds;
    double toffoli_t_ratio = 4.0;
    double rotation_t_ratio = 100.0;
    normalize::DepthDensity depth_density = normalize::DepthDensity::HalfQubitProduct;
    double overhead = 1.0;

    friend bool operator==(const Config&, const Config&) = default;
};

enum class EntrySource { Bundled, User };

/// The full data set a command operates on: milestones, applications,
/// systems, and configuration. Entity ids are unique within each list.
struct Catalog {
    std::vector<Milestone> milestones;
    std::vector<Application> applications;
    std::vector<SystemSpec> systems;
    Config config;

    // Where each entity came from, keyed "milestone:<id>" etc. Not part of
    // catalog equality.
    std::map<std::string, EntrySource> sources;

    friend bool operator==(const Catalog& a, const Catalog& b) {
        return a.milestones == b.milestones && a.applications == b.applications &&
               a.systems == b.systems && a.config == b.config;
    }
};

enum class CatalogFormat { Yaml, Json };

/// Catalog with the bundled datasets and default config.
Catalog bundled_catalog();

/// Parse catalog text (YAML or JSON, sniffed) and validate it. With
/// merge_bundled, user entries override bundled ones by id.
Catalog parse_catalog(const std::string& text, bool merge_bundled = true);

/// Load a catalog file. A missing path with merge_bundled yields the
/// bundled catalog; otherwise throws ParseError.
Catalog load_catalog(const std::filesystem::path& path, bool merge_bundled = true);

/// Serialize; load_catalog(write_catalog(c)) == c in either format.
std::string write_catalog(const Catalog& catalog, CatalogFormat format = CatalogFormat::Yaml);

} // namespace qcap
