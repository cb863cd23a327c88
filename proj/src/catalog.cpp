#include "qcap/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include <json.hpp>

#include "qcap/errors.hpp"

namespace qcap {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// YAML -> canonical JSON

bool is_integer_literal(const std::string& s) {
    static const std::regex re(R"(^[-+]?[0-9]+$)");
    return std::regex_match(s, re);
}

bool is_float_literal(const std::string& s) {
    static const std::regex re(R"(^[-+]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][-+]?[0-9]+)?$)");
    return std::regex_match(s, re);
}

json yaml_to_json(const YAML::Node& node) {
    switch (node.Type()) {
    case YAML::NodeType::Null:
        return nullptr;
    case YAML::NodeType::Scalar: {
        const std::string& s = node.Scalar();
        if (node.Tag() == "!")
            return s; // explicitly quoted
        if (s == "true") return true;
        if (s == "false") return false;
        if (s == "null" || s == "~") return nullptr;
        if (is_integer_literal(s)) {
            try {
                return std::stoll(s);
            } catch (const std::out_of_range&) {
                return std::stod(s);
            }
        }
        if (is_float_literal(s))
            return std::stod(s);
        return s;
    }
    case YAML::NodeType::Sequence: {
        json arr = json::array();
        for (const auto& item : node)
            arr.push_back(yaml_to_json(item));
        return arr;
    }
    case YAML::NodeType::Map: {
        json obj = json::object();
        for (const auto& kv : node)
            obj[kv.first.as<std::string>()] = yaml_to_json(kv.second);
        return obj;
    }
    default:
        return nullptr;
    }
}

json parse_text(const std::string& text) {
    // Sniff: a JSON document here always starts with '{'.
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(e.what());
        }
    }
    try {
        YAML::Node node = YAML::Load(text);
        if (node.IsNull())
            return json::object();
        if (!node.IsMap())
            throw ParseError("catalog root must be a mapping");
        return yaml_to_json(node);
    } catch (const YAML::Exception& e) {
        throw ParseError("line " + std::to_string(e.mark.line + 1) + ", column " +
                         std::to_string(e.mark.column + 1) + ": " + e.msg);
    }
}

// ---------------------------------------------------------------------------
// Field access helpers

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key))
            throw ValidationError(where + ": unknown field '" + key + "'");
    }
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw ValidationError(where + ": missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ValidationError(where + ": field '" + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw ValidationError(where + ": field '" + key + "' must be finite");
    return d;
}

std::int64_t as_integer(const json& v, const std::string& key, const std::string& where) {
    if (v.is_number_integer())
        return v.get<std::int64_t>();
    if (v.is_number_float()) {
        double d = v.get<double>();
        if (d == std::floor(d) && std::abs(d) < 9.2e18)
            return static_cast<std::int64_t>(d);
    }
    throw ValidationError(where + ": field '" + key + "' must be an integer");
}

std::int64_t require_integer(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw ValidationError(where + ": missing field '" + key + "'");
    return as_integer(obj.at(key), key, where);
}

std::string require_string(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw ValidationError(where + ": missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_string())
        throw ValidationError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

// ---------------------------------------------------------------------------
// Entity readers

Milestone read_milestone(const json& obj) {
    static const std::set<std::string> allowed = {
        "vendor", "year", "name", "declared_type", "n_physical", "n_logical",
        "error_rate", "n_gates", "circuit_depth", "clock_hz", "inferred_fields"};
    std::string where = "milestone";
    if (obj.contains("vendor") && obj.at("vendor").is_string())
        where = "milestone '" + obj.at("vendor").get<std::string>() + "'";
    reject_unknown_fields(obj, allowed, where);

    Milestone m;
    m.vendor = require_string(obj, "vendor", where);
    m.year = static_cast<int>(require_integer(obj, "year", where));
    if (obj.contains("name"))
        m.name = require_string(obj, "name", where);
    where = "milestone '" + m.id() + "'";
    if (obj.contains("declared_type")) {
        auto type = parse_system_type(obj.at("declared_type").get<std::string>());
        if (!type)
            throw ValidationError(where + ": declared_type must be one of N, EF, F");
        m.declared_type = type;
    }
    if (obj.contains("n_physical")) {
        m.n_physical = require_integer(obj, "n_physical", where);
        if (*m.n_physical < 1)
            throw ValidationError(where + ": n_physical must be >= 1");
    }
    if (obj.contains("n_logical")) {
        m.n_logical = require_integer(obj, "n_logical", where);
        if (*m.n_logical < 1)
            throw ValidationError(where + ": n_logical must be >= 1");
    }
    if (obj.contains("error_rate")) {
        m.error_rate = require_number(obj, "error_rate", where);
        if (!(*m.error_rate > 0.0) || *m.error_rate > 1.0)
            throw ValidationError(where + ": error_rate must be in (0, 1]");
    }
    if (obj.contains("n_gates")) {
        m.n_gates = require_number(obj, "n_gates", where);
        if (!(*m.n_gates > 0.0))
            throw ValidationError(where + ": n_gates must be positive");
    }
    if (obj.contains("circuit_depth")) {
        m.circuit_depth = require_number(obj, "circuit_depth", where);
        if (!(*m.circuit_depth > 0.0))
            throw ValidationError(where + ": circuit_depth must be positive");
    }
    if (obj.contains("clock_hz")) {
        m.clock_hz = require_number(obj, "clock_hz", where);
        if (!(*m.clock_hz > 0.0))
            throw ValidationError(where + ": clock_hz must be positive");
    }
    if (obj.contains("inferred_fields")) {
        const json& arr = obj.at("inferred_fields");
        if (!arr.is_array())
            throw ValidationError(where + ": inferred_fields must be a list");
        for (const auto& f : arr)
            m.inferred_fields.push_back(f.get<std::string>());
    }
    if (!m.n_physical && !m.n_logical)
        throw ValidationError(where + ": needs n_physical or n_logical");
    return m;
}

Application read_application(const json& obj) {
    static const std::set<std::string> allowed = {"id",    "label", "n_qubits",
                                                  "n_gates", "shots", "domain_tag"};
    std::string where = "application";
    if (obj.contains("id") && obj.at("id").is_string())
        where = "application '" + obj.at("id").get<std::string>() + "'";
    reject_unknown_fields(obj, allowed, where);

    Application app;
    app.id = require_string(obj, "id", where);
    app.label = obj.contains("label") ? require_string(obj, "label", where) : app.id;
    const std::int64_t qubits = require_integer(obj, "n_qubits", where);
    const double gates = require_number(obj, "n_gates", where);
    if (qubits < 1)
        throw ValidationError(where + ": n_qubits must be >= 1");
    if (!(gates >= 1.0))
        throw ValidationError(where + ": n_gates must be >= 1");
    app.pvec = PVector(qubits, gates);
    app.shots = require_integer(obj, "shots", where);
    if (app.shots < 1)
        throw ValidationError(where + ": shots must be >= 1");
    if (obj.contains("domain_tag")) {
        auto tag = parse_domain_tag(obj.at("domain_tag").get<std::string>());
        if (!tag)
            throw ValidationError(where + ": domain_tag must be one of condensed-matter, "
                                          "chemistry, hep, other");
        app.domain = *tag;
    }
    return app;
}

SystemSpec read_system(const json& obj) {
    static const std::set<std::string> allowed = {"id", "max_gates", "clock_hz", "max_qubits"};
    std::string where = "system";
    if (obj.contains("id") && obj.at("id").is_string())
        where = "system '" + obj.at("id").get<std::string>() + "'";
    reject_unknown_fields(obj, allowed, where);

    SystemSpec sys;
    sys.id = require_string(obj, "id", where);
    sys.max_gates = require_number(obj, "max_gates", where);
    if (!(sys.max_gates >= 1.0))
        throw ValidationError(where + ": max_gates must be >= 1");
    sys.clock_hz = require_number(obj, "clock_hz", where);
    if (!(sys.clock_hz > 0.0))
        throw ValidationError(where + ": clock_hz must be positive");
    if (obj.contains("max_qubits")) {
        sys.max_qubits = require_integer(obj, "max_qubits", where);
        if (*sys.max_qubits < 1)
            throw ValidationError(where + ": max_qubits must be >= 1");
    }
    return sys;
}

Config read_config(const json& obj, Config base) {
    static const std::set<std::string> allowed = {"year_seconds", "toffoli_t_ratio",
                                                  "rotation_t_ratio", "depth_density", "overhead"};
    reject_unknown_fields(obj, allowed, "config");
    if (obj.contains("year_seconds")) {
        base.year_seconds = require_number(obj, "year_seconds", "config");
        // the band ladder ends ... < 1 month < 1 year; a shorter year would
        // reorder it
        if (!(base.year_seconds > workload::kMonthSeconds))
            throw ValidationError("config: year_seconds must exceed one month (2592000)");
    }
    if (obj.contains("toffoli_t_ratio")) {
        base.toffoli_t_ratio = require_number(obj, "toffoli_t_ratio", "config");
        if (!(base.toffoli_t_ratio > 0.0))
            throw ValidationError("config: toffoli_t_ratio must be positive");
    }
    if (obj.contains("rotation_t_ratio")) {
        base.rotation_t_ratio = require_number(obj, "rotation_t_ratio", "config");
        if (!(base.rotation_t_ratio > 0.0))
            throw ValidationError("config: rotation_t_ratio must be positive");
    }
    if (obj.contains("depth_density")) {
        auto density = normalize::parse_depth_density(require_string(obj, "depth_density", "config"));
        if (!density)
            throw ValidationError("config: depth_density must be half-qubit-product or "
                                  "three-quarter-layer");
        base.depth_density = *density;
    }
    if (obj.contains("overhead")) {
        base.overhead = require_number(obj, "overhead", "config");
        if (base.overhead < 1.0)
            throw ValidationError("config: overhead must be >= 1");
    }
    return base;
}

// Apply one file entry: a repeated id within the same file is an error, an
// id already present in the base catalog is an override.
template <typename T, typename IdFn>
void upsert(std::vector<T>& list, T entry, IdFn id_of, std::map<std::string, EntrySource>& sources,
            std::set<std::string>& seen_in_file, const std::string& kind) {
    const std::string id = id_of(entry);
    if (!seen_in_file.insert(id).second)
        throw ValidationError(kind + " '" + id + "': duplicate id");
    auto it = std::find_if(list.begin(), list.end(),
                           [&](const T& e) { return id_of(e) == id; });
    if (it != list.end())
        *it = std::move(entry);
    else
        list.push_back(std::move(entry));
    sources[kind + ":" + id] = EntrySource::User;
}

// ---------------------------------------------------------------------------
// Serialization

json milestone_to_json(const Milestone& m) {
    json obj;
    obj["vendor"] = m.vendor;
    obj["year"] = m.year;
    if (m.name) obj["name"] = *m.name;
    if (m.declared_type) obj["declared_type"] = to_string(*m.declared_type);
    if (m.n_physical) obj["n_physical"] = *m.n_physical;
    if (m.n_logical) obj["n_logical"] = *m.n_logical;
    if (m.error_rate) obj["error_rate"] = *m.error_rate;
    if (m.n_gates) obj["n_gates"] = *m.n_gates;
    if (m.circuit_depth) obj["circuit_depth"] = *m.circuit_depth;
    if (m.clock_hz) obj["clock_hz"] = *m.clock_hz;
    if (!m.inferred_fields.empty()) obj["inferred_fields"] = m.inferred_fields;
    return obj;
}

json application_to_json(const Application& app) {
    json obj;
    obj["id"] = app.id;
    obj["label"] = app.label;
    obj["n_qubits"] = app.pvec.n_qubits;
    obj["n_gates"] = app.pvec.n_gates;
    obj["shots"] = app.shots;
    obj["domain_tag"] = to_string(app.domain);
    return obj;
}

json system_to_json(const SystemSpec& sys) {
    json obj;
    obj["id"] = sys.id;
    obj["max_gates"] = sys.max_gates;
    obj["clock_hz"] = sys.clock_hz;
    if (sys.max_qubits) obj["max_qubits"] = *sys.max_qubits;
    return obj;
}

json catalog_to_json(const Catalog& c) {
    json root;
    root["config"] = {
        {"year_seconds", c.config.year_seconds},
        {"toffoli_t_ratio", c.config.toffoli_t_ratio},
        {"rotation_t_ratio", c.config.rotation_t_ratio},
        {"depth_density", normalize::to_string(c.config.depth_density)},
        {"overhead", c.config.overhead},
    };
    root["milestones"] = json::array();
    for (const auto& m : c.milestones)
        root["milestones"].push_back(milestone_to_json(m));
    root["applications"] = json::array();
    for (const auto& a : c.applications)
        root["applications"].push_back(application_to_json(a));
    root["systems"] = json::array();
    for (const auto& s : c.systems)
        root["systems"].push_back(system_to_json(s));
    return root;
}

YAML::Emitter& emit_json(YAML::Emitter& out, const json& value) {
    switch (value.type()) {
    case json::value_t::object:
        out << YAML::BeginMap;
        for (const auto& [key, v] : value.items()) {
            out << YAML::Key << key << YAML::Value;
            emit_json(out, v);
        }
        out << YAML::EndMap;
        break;
    case json::value_t::array:
        out << YAML::BeginSeq;
        for (const auto& v : value)
            emit_json(out, v);
        out << YAML::EndSeq;
        break;
    case json::value_t::string:
        // double-quote so numeric-looking ids survive the round trip
        out << YAML::DoubleQuoted << value.get<std::string>();
        break;
    case json::value_t::boolean:
        out << value.get<bool>();
        break;
    case json::value_t::number_integer:
        out << value.get<std::int64_t>();
        break;
    case json::value_t::number_unsigned:
        out << value.get<std::uint64_t>();
        break;
    case json::value_t::number_float:
        out << value.dump(); // shortest round-trip decimal
        break;
    default:
        out << YAML::Null;
        break;
    }
    return out;
}

} // namespace

Catalog bundled_catalog() {
    Catalog c;
    c.milestones = bundled_milestones();
    c.applications = bundled_workload();
    c.systems = bundled_systems();
    for (const auto& m : c.milestones)
        c.sources["milestone:" + m.id()] = EntrySource::Bundled;
    for (const auto& a : c.applications)
        c.sources["application:" + a.id] = EntrySource::Bundled;
    for (const auto& s : c.systems)
        c.sources["system:" + s.id] = EntrySource::Bundled;
    return c;
}

Catalog parse_catalog(const std::string& text, bool merge_bundled) {
    const json root = parse_text(text);
    if (!root.is_object())
        throw ParseError("catalog root must be an object");
    static const std::set<std::string> allowed = {"config", "milestones", "applications",
                                                  "systems"};
    reject_unknown_fields(root, allowed, "catalog");

    Catalog c = merge_bundled ? bundled_catalog() : Catalog{};
    if (root.contains("config"))
        c.config = read_config(root.at("config"), c.config);

    auto milestone_id = [](const Milestone& m) { return m.id(); };
    auto app_id = [](const Application& a) { return a.id; };
    auto system_id = [](const SystemSpec& s) { return s.id; };

    std::set<std::string> file_milestones, file_apps, file_systems;
    if (root.contains("milestones")) {
        if (!root.at("milestones").is_array())
            throw ValidationError("catalog: milestones must be a list");
        for (const auto& obj : root.at("milestones"))
            upsert(c.milestones, read_milestone(obj), milestone_id, c.sources, file_milestones,
                   "milestone");
    }
    if (root.contains("applications")) {
        if (!root.at("applications").is_array())
            throw ValidationError("catalog: applications must be a list");
        for (const auto& obj : root.at("applications"))
            upsert(c.applications, read_application(obj), app_id, c.sources, file_apps,
                   "application");
    }
    if (root.contains("systems")) {
        if (!root.at("systems").is_array())
            throw ValidationError("catalog: systems must be a list");
        for (const auto& obj : root.at("systems"))
            upsert(c.systems, read_system(obj), system_id, c.sources, file_systems, "system");
    }
    return c;
}

Catalog load_catalog(const std::filesystem::path& path, bool merge_bundled) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open catalog file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str(), merge_bundled);
}

std::string write_catalog(const Catalog& catalog, CatalogFormat format) {
    const json root = catalog_to_json(catalog);
    if (format == CatalogFormat::Json)
        return root.dump(2) + "\n";
    YAML::Emitter out;
    emit_json(out, root);
    return std::string(out.c_str()) + "\n";
}

} // namespace qcap
