#include "cadel/config_io.hpp"

#include "cadel/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace cadel {

using nlohmann::json;

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{
        "name",
        "cable_count",
        "arm_ring.radius_m",
        "arm_ring.offset_m",
        "arm_ring.anchor_angles_deg",
        "forearm_ring.radius_m",
        "forearm_ring.offset_m",
        "forearm_ring.anchor_angles_deg",
        "routing",
        "elbow_guide.offset_m",
        "motor.pulley_radius_m",
        "motor.max_torque_Nm",
        "motor.max_speed_deg_s",
        "motor.efficiency",
        "tension.t_min_N",
        "tension.t_max_N",
    };
    return keys;
}

const json& require(const json& doc, const std::string& key) {
    const auto it = doc.find(key);
    if (it == doc.end()) throw ConfigError("missing key '" + key + "'");
    return *it;
}

double number(const json& doc, const std::string& key) {
    const json& v = require(doc, key);
    if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
    return v.get<double>();
}

std::vector<double> angles_deg(const json& doc, const std::string& key) {
    const json& v = require(doc, key);
    if (!v.is_array()) throw ConfigError("key '" + key + "' must be an array of degrees");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) throw ConfigError("key '" + key + "' must contain numbers");
        out.push_back(deg2rad(e.get<double>()));
    }
    return out;
}

std::string routing_name(const Routing& r) {
    if (std::holds_alternative<ElbowGuide>(r)) return "elbow_guide";
    if (std::holds_alternative<ForearmFollowing>(r)) return "forearm_following";
    return "direct";
}

// Keeps dumped angles short so presets survive a round trip bit-for-bit.
double tidy_degrees(double rad) { return std::round(rad2deg(rad) * 1e9) / 1e9; }

}  // namespace

DeviceConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (!known_keys().contains(key)) throw ConfigError("unknown key '" + key + "'");

    DeviceConfig c;
    const json& name = require(doc, "name");
    if (!name.is_string()) throw ConfigError("key 'name' must be a string");
    c.name = name.get<std::string>();
    const json& count = require(doc, "cable_count");
    if (!count.is_number_integer()) throw ConfigError("key 'cable_count' must be an integer");
    c.cable_count = count.get<int>();

    c.arm_ring.radius = number(doc, "arm_ring.radius_m");
    c.arm_ring.offset_from_elbow = number(doc, "arm_ring.offset_m");
    c.arm_ring.anchor_angles = angles_deg(doc, "arm_ring.anchor_angles_deg");
    c.forearm_ring.radius = number(doc, "forearm_ring.radius_m");
    c.forearm_ring.offset_from_elbow = number(doc, "forearm_ring.offset_m");
    c.forearm_ring.anchor_angles = angles_deg(doc, "forearm_ring.anchor_angles_deg");

    const json& routing = require(doc, "routing");
    if (!routing.is_array()) throw ConfigError("key 'routing' must be an array");
    bool any_guide = false;
    for (const auto& r : routing) {
        const std::string mode = r.is_string() ? r.get<std::string>() : "";
        if (mode == "direct") {
            c.routing.emplace_back(Direct{});
        } else if (mode == "forearm_following") {
            c.routing.emplace_back(ForearmFollowing{});
        } else if (mode == "elbow_guide") {
            c.routing.emplace_back(ElbowGuide{});
            any_guide = true;
        } else {
            throw ConfigError("routing entries must be direct, elbow_guide or forearm_following");
        }
    }
    if (any_guide) {
        const double offset = number(doc, "elbow_guide.offset_m");
        for (auto& r : c.routing)
            if (auto* g = std::get_if<ElbowGuide>(&r)) g->guide_point_offset = offset;
    }

    c.motor.pulley_radius = number(doc, "motor.pulley_radius_m");
    c.motor.max_torque = number(doc, "motor.max_torque_Nm");
    c.motor.max_speed = deg2rad(number(doc, "motor.max_speed_deg_s"));
    c.motor.efficiency = number(doc, "motor.efficiency");
    c.tension_limits.t_min = number(doc, "tension.t_min_N");
    c.tension_limits.t_max = number(doc, "tension.t_max_N");
    return validate_config(c);
}

DeviceConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const DeviceConfig& c) {
    json doc;
    doc["name"] = c.name;
    doc["cable_count"] = c.cable_count;
    doc["arm_ring.radius_m"] = c.arm_ring.radius;
    doc["arm_ring.offset_m"] = c.arm_ring.offset_from_elbow;
    doc["forearm_ring.radius_m"] = c.forearm_ring.radius;
    doc["forearm_ring.offset_m"] = c.forearm_ring.offset_from_elbow;
    json arm = json::array(), fore = json::array(), routing = json::array();
    for (double a : c.arm_ring.anchor_angles) arm.push_back(tidy_degrees(a));
    for (double a : c.forearm_ring.anchor_angles) fore.push_back(tidy_degrees(a));
    for (const auto& r : c.routing) {
        routing.push_back(routing_name(r));
        if (const auto* g = std::get_if<ElbowGuide>(&r))
            doc["elbow_guide.offset_m"] = g->guide_point_offset;
    }
    doc["arm_ring.anchor_angles_deg"] = arm;
    doc["forearm_ring.anchor_angles_deg"] = fore;
    doc["routing"] = routing;
    doc["motor.pulley_radius_m"] = c.motor.pulley_radius;
    doc["motor.max_torque_Nm"] = c.motor.max_torque;
    doc["motor.max_speed_deg_s"] = tidy_degrees(c.motor.max_speed);
    doc["motor.efficiency"] = c.motor.efficiency;
    doc["tension.t_min_N"] = c.tension_limits.t_min;
    doc["tension.t_max_N"] = c.tension_limits.t_max;
    return doc.dump(2) + "\n";
}

void save_config(const DeviceConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write config file '" + path.string() + "'");
    out << dump_config(config);
}

}  // namespace cadel
