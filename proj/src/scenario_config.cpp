#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "halobeam/scenario.hpp"

namespace halobeam {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path.empty() ? what : path + ": " + what);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

const json& expect_object(const json& value, const std::string& path) {
    if (!value.is_object()) fail(path, "expected an object");
    return value;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) {
            if (it.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) fail(join(path, it.key()), "unknown key");
    }
}

double get_number(const json& obj, const std::string& path, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(join(path, key), "expected a number");
    return v.get<double>();
}

int get_int(const json& obj, const std::string& path, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(join(path, key), "expected an integer");
    return v.get<int>();
}

std::uint64_t get_u64(const json& obj, const std::string& path, const char* key,
                      std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0))) {
        fail(join(path, key), "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string get_string(const json& obj, const std::string& path, const char* key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) fail(join(path, key), "expected a string");
    return v.get<std::string>();
}

void parse_geometry(const json& obj, GeometricParameters& geo) {
    check_keys(obj, "geometry",
               {"earth_radius_km", "moon_radius_km", "lunar_orbit_radius_km",
                "emlp2_moon_distance_km", "earth_obliquity_deg", "lunar_obliquity_deg",
                "lunar_obliquity_ecliptic_deg", "lunar_orbit_inclination_deg"});
    geo.earth_radius_km = get_number(obj, "geometry", "earth_radius_km", geo.earth_radius_km);
    geo.moon_radius_km = get_number(obj, "geometry", "moon_radius_km", geo.moon_radius_km);
    geo.lunar_orbit_radius_km =
        get_number(obj, "geometry", "lunar_orbit_radius_km", geo.lunar_orbit_radius_km);
    geo.emlp2_moon_distance_km =
        get_number(obj, "geometry", "emlp2_moon_distance_km", geo.emlp2_moon_distance_km);
    geo.earth_obliquity_deg =
        get_number(obj, "geometry", "earth_obliquity_deg", geo.earth_obliquity_deg);
    geo.lunar_obliquity_deg =
        get_number(obj, "geometry", "lunar_obliquity_deg", geo.lunar_obliquity_deg);
    geo.lunar_obliquity_ecliptic_deg = get_number(obj, "geometry", "lunar_obliquity_ecliptic_deg",
                                                  geo.lunar_obliquity_ecliptic_deg);
    geo.lunar_orbit_inclination_deg = get_number(obj, "geometry", "lunar_orbit_inclination_deg",
                                                 geo.lunar_orbit_inclination_deg);
}

void parse_temporal(const json& obj, TemporalParameters& tem) {
    check_keys(obj, "temporal",
               {"earth_rotation_period_h", "moon_period_h", "halo_period_h", "sim_duration_h",
                "sample_step_h"});
    tem.earth_rotation_period_h =
        get_number(obj, "temporal", "earth_rotation_period_h", tem.earth_rotation_period_h);
    tem.moon_period_h = get_number(obj, "temporal", "moon_period_h", tem.moon_period_h);
    tem.halo_period_h = get_number(obj, "temporal", "halo_period_h", tem.halo_period_h);
    tem.sim_duration_h = get_number(obj, "temporal", "sim_duration_h", tem.sim_duration_h);
    tem.sample_step_h = get_number(obj, "temporal", "sample_step_h", tem.sample_step_h);
}

void parse_constellation(const json& obj, const TemporalParameters& tem, ConstellationSpec& spec) {
    check_keys(obj, "constellation",
               {"kind", "a_z_km", "a_y_km", "period_h", "num_satellites", "phase_offsets_rad"});
    const std::string kind = get_string(obj, "constellation", "kind", "stable-emlp2");
    if (kind == "stable-emlp2") {
        spec = ConstellationSpec::stable();
        const int n = get_int(obj, "constellation", "num_satellites", 1);
        if (n != 1) fail("constellation.num_satellites", "stable-emlp2 implies one satellite");
        for (const char* key : {"a_z_km", "a_y_km", "period_h", "phase_offsets_rad"}) {
            if (obj.contains(key)) {
                fail(join("constellation", key), "not applicable to the stable-emlp2 kind");
            }
        }
        return;
    }
    if (kind != "halo") fail("constellation.kind", "expected \"stable-emlp2\" or \"halo\"");

    spec.kind = ConstellationKind::halo;
    spec.num_satellites = get_int(obj, "constellation", "num_satellites", 1);
    if (spec.num_satellites < 1) fail("constellation.num_satellites", "must be at least one");
    const double a_z = get_number(obj, "constellation", "a_z_km", 15000.0);
    spec.halo = HaloOrbitSpec::with_default_ratio(a_z, spec.num_satellites);
    spec.halo.a_y_km = get_number(obj, "constellation", "a_y_km", spec.halo.a_y_km);
    spec.halo.period_h = get_number(obj, "constellation", "period_h", tem.halo_period_h);
    if (obj.contains("phase_offsets_rad")) {
        const json& arr = obj.at("phase_offsets_rad");
        if (!arr.is_array()) fail("constellation.phase_offsets_rad", "expected an array");
        spec.halo.phase_offsets_rad.clear();
        for (const json& v : arr) {
            if (!v.is_number()) fail("constellation.phase_offsets_rad", "expected numbers");
            spec.halo.phase_offsets_rad.push_back(v.get<double>());
        }
        if (spec.halo.phase_offsets_rad.size() != static_cast<std::size_t>(spec.num_satellites)) {
            fail("constellation.phase_offsets_rad", "length must equal num_satellites");
        }
    }
}

void parse_region(const json& obj, Region& region) {
    check_keys(obj, "region",
               {"kind", "lat_min_deg", "lat_max_deg", "lon_min_deg", "lon_max_deg"});
    const std::string kind = get_string(obj, "region", "kind", "lfs");
    if (kind == "lfs") {
        region.kind = RegionKind::lfs;
    } else if (kind == "lfs_south_pole") {
        region.kind = RegionKind::lfs_south_pole;
    } else if (kind == "box") {
        region.kind = RegionKind::box;
        region.lat_min_deg = get_number(obj, "region", "lat_min_deg", -90.0);
        region.lat_max_deg = get_number(obj, "region", "lat_max_deg", 90.0);
        region.lon_min_deg = get_number(obj, "region", "lon_min_deg", -180.0);
        region.lon_max_deg = get_number(obj, "region", "lon_max_deg", 180.0);
        return;
    } else {
        fail("region.kind", "expected \"lfs\", \"lfs_south_pole\", or \"box\"");
    }
    for (const char* key : {"lat_min_deg", "lat_max_deg", "lon_min_deg", "lon_max_deg"}) {
        if (obj.contains(key)) fail(join("region", key), "only applicable to the box kind");
    }
}

void parse_pointing(const json& obj, PointingBlock& pointing) {
    check_keys(obj, "pointing", {"sigma_rad", "n_samples", "seed", "ranges_m"});
    pointing.sigma_rad = get_number(obj, "pointing", "sigma_rad", pointing.sigma_rad);
    pointing.n_samples = get_u64(obj, "pointing", "n_samples", pointing.n_samples);
    pointing.seed = get_u64(obj, "pointing", "seed", pointing.seed);
    if (obj.contains("ranges_m")) {
        const json& arr = obj.at("ranges_m");
        if (!arr.is_array()) fail("pointing.ranges_m", "expected an array");
        pointing.ranges_m.clear();
        for (const json& v : arr) {
            if (!v.is_number()) fail("pointing.ranges_m", "expected numbers");
            pointing.ranges_m.push_back(v.get<double>());
        }
        if (pointing.ranges_m.size() > 2) {
            fail("pointing.ranges_m", "at most two explicit ranges (min, max)");
        }
    }
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    expect_object(root, "");
    check_keys(root, "",
               {"name", "geometry", "temporal", "constellation", "region", "grid", "window",
                "link", "pointing", "stations", "output_dir"});

    ScenarioConfig c;
    c.name = get_string(root, "", "name", c.name);
    c.output_dir = get_string(root, "", "output_dir", c.output_dir);
    if (root.contains("geometry")) {
        parse_geometry(expect_object(root.at("geometry"), "geometry"), c.geometry);
    }
    if (root.contains("temporal")) {
        parse_temporal(expect_object(root.at("temporal"), "temporal"), c.temporal);
    }
    c.window.end_h = c.temporal.halo_period_h;
    if (root.contains("constellation")) {
        parse_constellation(expect_object(root.at("constellation"), "constellation"), c.temporal,
                            c.constellation);
    }
    if (root.contains("region")) {
        parse_region(expect_object(root.at("region"), "region"), c.region);
    }
    if (root.contains("grid")) {
        const json& g = expect_object(root.at("grid"), "grid");
        check_keys(g, "grid", {"d_theta_deg", "d_phi_deg"});
        c.grid.d_theta_deg = get_number(g, "grid", "d_theta_deg", c.grid.d_theta_deg);
        c.grid.d_phi_deg = get_number(g, "grid", "d_phi_deg", c.grid.d_phi_deg);
    }
    if (root.contains("window")) {
        const json& w = expect_object(root.at("window"), "window");
        check_keys(w, "window", {"start_h", "end_h", "step_h"});
        c.window.start_h = get_number(w, "window", "start_h", c.window.start_h);
        c.window.end_h = get_number(w, "window", "end_h", c.window.end_h);
        c.window.step_h = get_number(w, "window", "step_h", c.window.step_h);
    }
    if (root.contains("link")) {
        const json& l = expect_object(root.at("link"), "link");
        check_keys(l, "link",
                   {"p_t_w", "lambda_m", "eta_t", "eta_h", "d_r_m", "l_e", "l_s", "l_c"});
        c.link.p_t_w = get_number(l, "link", "p_t_w", c.link.p_t_w);
        c.link.lambda_m = get_number(l, "link", "lambda_m", c.link.lambda_m);
        c.link.eta_t = get_number(l, "link", "eta_t", c.link.eta_t);
        c.link.eta_h = get_number(l, "link", "eta_h", c.link.eta_h);
        c.link.d_r_m = get_number(l, "link", "d_r_m", c.link.d_r_m);
        c.link.l_e = get_number(l, "link", "l_e", c.link.l_e);
        c.link.l_s = get_number(l, "link", "l_s", c.link.l_s);
        c.link.l_c = get_number(l, "link", "l_c", c.link.l_c);
    }
    if (root.contains("pointing")) {
        parse_pointing(expect_object(root.at("pointing"), "pointing"), c.pointing);
    }
    if (root.contains("stations")) {
        const json& arr = root.at("stations");
        if (!arr.is_array()) fail("stations", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "stations[" + std::to_string(i) + "]";
            const json& s = expect_object(arr[i], path);
            check_keys(s, path, {"lat_deg", "lon_deg"});
            GroundStationSite site;
            site.lat_deg = get_number(s, path, "lat_deg", 0.0);
            site.lon_deg = get_number(s, path, "lon_deg", 0.0);
            c.stations.push_back(site);
        }
    }
    return c;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file: " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string serialize_config(const ScenarioConfig& c) {
    json root;
    root["name"] = c.name;
    root["output_dir"] = c.output_dir;
    root["geometry"] = {{"earth_radius_km", c.geometry.earth_radius_km},
                        {"moon_radius_km", c.geometry.moon_radius_km},
                        {"lunar_orbit_radius_km", c.geometry.lunar_orbit_radius_km},
                        {"emlp2_moon_distance_km", c.geometry.emlp2_moon_distance_km},
                        {"earth_obliquity_deg", c.geometry.earth_obliquity_deg},
                        {"lunar_obliquity_deg", c.geometry.lunar_obliquity_deg},
                        {"lunar_obliquity_ecliptic_deg", c.geometry.lunar_obliquity_ecliptic_deg},
                        {"lunar_orbit_inclination_deg", c.geometry.lunar_orbit_inclination_deg}};
    root["temporal"] = {{"earth_rotation_period_h", c.temporal.earth_rotation_period_h},
                        {"moon_period_h", c.temporal.moon_period_h},
                        {"halo_period_h", c.temporal.halo_period_h},
                        {"sim_duration_h", c.temporal.sim_duration_h},
                        {"sample_step_h", c.temporal.sample_step_h}};
    if (c.constellation.kind == ConstellationKind::stable_emlp2) {
        root["constellation"] = {{"kind", "stable-emlp2"}, {"num_satellites", 1}};
    } else {
        root["constellation"] = {{"kind", "halo"},
                                 {"a_z_km", c.constellation.halo.a_z_km},
                                 {"a_y_km", c.constellation.halo.a_y_km},
                                 {"period_h", c.constellation.halo.period_h},
                                 {"num_satellites", c.constellation.num_satellites},
                                 {"phase_offsets_rad", c.constellation.halo.phase_offsets_rad}};
    }
    switch (c.region.kind) {
        case RegionKind::lfs:
            root["region"] = {{"kind", "lfs"}};
            break;
        case RegionKind::lfs_south_pole:
            root["region"] = {{"kind", "lfs_south_pole"}};
            break;
        case RegionKind::box:
            root["region"] = {{"kind", "box"},
                              {"lat_min_deg", c.region.lat_min_deg},
                              {"lat_max_deg", c.region.lat_max_deg},
                              {"lon_min_deg", c.region.lon_min_deg},
                              {"lon_max_deg", c.region.lon_max_deg}};
            break;
    }
    root["grid"] = {{"d_theta_deg", c.grid.d_theta_deg}, {"d_phi_deg", c.grid.d_phi_deg}};
    root["window"] = {{"start_h", c.window.start_h},
                      {"end_h", c.window.end_h},
                      {"step_h", c.window.step_h}};
    root["link"] = {{"p_t_w", c.link.p_t_w},     {"lambda_m", c.link.lambda_m},
                    {"eta_t", c.link.eta_t},     {"eta_h", c.link.eta_h},
                    {"d_r_m", c.link.d_r_m},     {"l_e", c.link.l_e},
                    {"l_s", c.link.l_s},         {"l_c", c.link.l_c}};
    json pointing = {{"sigma_rad", c.pointing.sigma_rad},
                     {"n_samples", c.pointing.n_samples},
                     {"seed", c.pointing.seed}};
    if (!c.pointing.ranges_m.empty()) {
        pointing["ranges_m"] = c.pointing.ranges_m;
    }
    root["pointing"] = pointing;
    json stations = json::array();
    for (const auto& s : c.stations) {
        stations.push_back({{"lat_deg", s.lat_deg}, {"lon_deg", s.lon_deg}});
    }
    root["stations"] = stations;
    return root.dump(2) + "\n";
}

namespace {

const std::vector<GroundStationSite> kDefaultStations = {
    {35.4, -116.9},  // Goldstone area
    {40.4, -4.2},    // Madrid area
    {-35.4, 149.0},  // Canberra area
};

ScenarioConfig make_scenario(const std::string& name) {
    ScenarioConfig c;
    c.name = name;
    c.window = TimeWindow{0.0, c.temporal.halo_period_h, 1.0};
    c.output_dir = "out/" + name;
    return c;
}

ScenarioConfig stable_scenario(const std::string& name) {
    ScenarioConfig c = make_scenario(name);
    c.constellation = ConstellationSpec::stable();
    c.pointing.sigma_rad = 5e-9;
    return c;
}

ScenarioConfig halo_scenario(const std::string& name, double a_z_km, int num_satellites) {
    ScenarioConfig c = make_scenario(name);
    c.constellation = ConstellationSpec::halo_orbit(a_z_km, num_satellites);
    c.constellation.halo.period_h = c.temporal.halo_period_h;
    c.pointing.sigma_rad = 50e-9;
    return c;
}

struct BuiltinEntry {
    ScenarioConfig config;
    std::string description;
};

std::map<std::string, BuiltinEntry> build_registry() {
    std::map<std::string, BuiltinEntry> reg;
    auto add = [&](ScenarioConfig c, std::string description) {
        const std::string name = c.name;
        reg.emplace(name, BuiltinEntry{std::move(c), std::move(description)});
    };

    add(stable_scenario("stable-1sat"),
        "Stable EMLP-2 satellite, LFS coverage over one halo period");

    for (double a_z : {5000.0, 10000.0, 15000.0}) {
        const std::string tag = std::to_string(static_cast<int>(a_z));
        add(halo_scenario("fig5-az" + tag + "-3sat", a_z, 3),
            "Triple-satellite LFS SCP timeline, A_z = " + tag + " km");
    }

    for (double a_z : {5000.0, 15000.0}) {
        const std::string tag = std::to_string(static_cast<int>(a_z));
        ScenarioConfig c = halo_scenario("fig6-az" + tag + "-3sat", a_z, 3);
        c.stations = kDefaultStations;
        add(std::move(c), "Triple-satellite Earth-visibility trace, A_z = " + tag + " km");
    }

    add(stable_scenario("fig7-stable-1sat"),
        "Minimum-SCP cell dump, stable EMLP-2 satellite");
    for (int n : {1, 2, 3}) {
        add(halo_scenario("fig7-halo-" + std::to_string(n) + "sat", 15000.0, n),
            "Minimum-SCP cell dump, " + std::to_string(n) + " revolving satellite(s)");
    }

    {
        ScenarioConfig c = stable_scenario("fig8-stable");
        add(std::move(c), "Harvested-power CDF, stable satellite (sigma = 5 nrad)");
    }
    {
        ScenarioConfig c = halo_scenario("fig8-revolving", 15000.0, 1);
        add(std::move(c), "Harvested-power CDF, revolving satellite (sigma = 50 nrad)");
    }

    for (int n : {1, 2, 3}) {
        ScenarioConfig c = halo_scenario("table4-" + std::to_string(n) + "sat-southpole",
                                         15000.0, n);
        c.region.kind = RegionKind::lfs_south_pole;
        add(std::move(c), "LFS south pole full-coverage time rate, " + std::to_string(n) +
                              " satellite(s)");
    }
    return reg;
}

const std::map<std::string, BuiltinEntry>& builtin_registry() {
    static const std::map<std::string, BuiltinEntry> registry = build_registry();
    return registry;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
    std::vector<std::string> names;
    names.reserve(builtin_registry().size());
    for (const auto& [name, entry] : builtin_registry()) {
        names.push_back(name);
    }
    return names;
}

ScenarioConfig builtin_scenario(const std::string& name) {
    const auto it = builtin_registry().find(name);
    if (it == builtin_registry().end()) {
        throw ConfigError("unknown builtin scenario: " + name);
    }
    return it->second.config;
}

std::string builtin_scenario_description(const std::string& name) {
    const auto it = builtin_registry().find(name);
    if (it == builtin_registry().end()) {
        throw ConfigError("unknown builtin scenario: " + name);
    }
    return it->second.description;
}

ValidationReport validate_config(const ScenarioConfig& c) {
    ValidationReport report;
    auto collect = [&](auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            report.errors.emplace_back(e.what());
        }
    };
    collect([&] { c.geometry.validate(); });
    collect([&] { c.temporal.validate(); });
    collect([&] { c.link.validate(); });
    collect([&] { c.constellation.validate(); });
    collect([&] { PointingErrorModel{c.pointing.sigma_rad}.validate(); });

    if (c.pointing.n_samples == 0) {
        report.errors.emplace_back("pointing.n_samples must be at least one");
    }
    for (double r : c.pointing.ranges_m) {
        if (!(r > 0.0)) report.errors.emplace_back("pointing.ranges_m entries must be positive");
    }
    if (!(c.grid.d_theta_deg > 0.0) || !(c.grid.d_phi_deg > 0.0)) {
        report.errors.emplace_back("grid sampling intervals must be positive");
    }
    if (!(c.window.step_h > 0.0)) {
        report.errors.emplace_back("window.step_h must be positive");
    }
    if (c.window.end_h < c.window.start_h) {
        report.errors.emplace_back("window.end_h must not precede window.start_h");
    }
    if (c.region.kind == RegionKind::box &&
        (c.region.lat_min_deg >= c.region.lat_max_deg ||
         c.region.lon_min_deg >= c.region.lon_max_deg)) {
        report.errors.emplace_back("region box bounds are empty or inverted");
    }
    for (const auto& s : c.stations) {
        if (s.lat_deg < -90.0 || s.lat_deg > 90.0 || s.lon_deg < -180.0 || s.lon_deg > 180.0) {
            report.errors.emplace_back("station coordinates out of range");
        }
    }

    if (c.constellation.kind == ConstellationKind::halo && report.errors.empty()) {
        const auto check = validate_visibility_constraint(c.constellation.halo);
        if (!check.satisfied) {
            std::ostringstream msg;
            msg << "Earth-visibility constraint violated (A_y=" << c.constellation.halo.a_y_km
                << " < " << kMinSemiMinorAxisKm << " km)";
            report.warnings.push_back(msg.str());
        }
        const double expected_a_y = kHaloAxisRatio * c.constellation.halo.a_z_km;
        if (std::abs(c.constellation.halo.a_y_km - expected_a_y) > 1e-9 * expected_a_y) {
            std::ostringstream msg;
            msg << "semi-minor axis A_y=" << c.constellation.halo.a_y_km
                << " overrides the " << kHaloAxisRatio << "*A_z relation (expected "
                << expected_a_y << " km)";
            report.warnings.push_back(msg.str());
        }
    }
    return report;
}

std::string content_hash(std::string_view text) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf, 16);
}

std::string RunSummary::to_json() const {
    json root;
    root["scenario"] = scenario;
    root["config_hash"] = config_hash;
    root["seed"] = seed;
    root["wall_seconds"] = wall_seconds;
    root["metrics"] = json(metrics);
    return root.dump(2) + "\n";
}

}  // namespace halobeam
