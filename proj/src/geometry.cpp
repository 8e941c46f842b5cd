#include "cadel/geometry.hpp"

#include "cadel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace cadel {

bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.radius == b.radius && a.offset_from_elbow == b.offset_from_elbow &&
           a.anchor_angles == b.anchor_angles;
}

bool operator==(const MotorSpec& a, const MotorSpec& b) {
    return a.pulley_radius == b.pulley_radius && a.max_torque == b.max_torque &&
           a.max_speed == b.max_speed && a.efficiency == b.efficiency;
}

bool operator==(const TensionLimits& a, const TensionLimits& b) {
    return a.t_min == b.t_min && a.t_max == b.t_max;
}

bool operator==(const DeviceConfig& a, const DeviceConfig& b) {
    return a.name == b.name && a.cable_count == b.cable_count && a.arm_ring == b.arm_ring &&
           a.forearm_ring == b.forearm_ring && a.routing == b.routing && a.motor == b.motor &&
           a.tension_limits == b.tension_limits;
}

RangeOfMotion human_rom() {
    return {deg2rad(-60.0), deg2rad(60.0), deg2rad(-50.0), deg2rad(50.0)};
}

std::string_view version_name(Version v) {
    switch (v) {
        case Version::Cadel: return "cadel";
        case Version::Cadel3: return "cadel3";
        case Version::LCadel: return "lcadel";
    }
    return "unknown";
}

Version parse_version(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (c == '.' || c == '-' || c == '_') continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (Version v : all_versions)
        if (key == version_name(v)) return v;
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected cadel, cadel3 or lcadel)");
}

namespace {

DeviceConfig base_config() {
    DeviceConfig c;
    c.arm_ring.radius = 0.080;
    c.arm_ring.offset_from_elbow = 0.030;
    c.forearm_ring.radius = 0.050;
    c.forearm_ring.offset_from_elbow = 0.150;
    return c;
}

void four_cable_layout(DeviceConfig& c) {
    const std::vector<double> angles{deg2rad(0.0), deg2rad(90.0), deg2rad(180.0),
                                     deg2rad(-90.0)};
    c.cable_count = 4;
    c.arm_ring.anchor_angles = angles;
    c.forearm_ring.anchor_angles = angles;
    c.routing.assign(4, Direct{});
}

}  // namespace

DeviceConfig build_preset(Version version) {
    DeviceConfig c = base_config();
    c.name = std::string(version_name(version));
    switch (version) {
        case Version::Cadel:
            four_cable_layout(c);
            break;
        case Version::Cadel3:
            four_cable_layout(c);
            c.routing[0] = ElbowGuide{};
            break;
        case Version::LCadel: {
            const std::vector<double> angles{deg2rad(20.0), deg2rad(-20.0)};
            c.cable_count = 2;
            c.arm_ring.anchor_angles = angles;
            c.forearm_ring.anchor_angles = angles;
            c.routing.assign(2, ForearmFollowing{});
            break;
        }
    }
    return validate_config(c);
}

std::vector<std::string> config_violations(const DeviceConfig& c) {
    std::vector<std::string> v;
    auto finite_positive = [&](double x, const char* field) {
        if (!(std::isfinite(x) && x > 0.0)) v.push_back(std::string(field) + " must be > 0");
    };
    if (c.cable_count != 2 && c.cable_count != 4)
        v.push_back("cable_count must be 2 or 4");
    finite_positive(c.arm_ring.radius, "arm_ring radius");
    finite_positive(c.arm_ring.offset_from_elbow, "arm_ring offset");
    finite_positive(c.forearm_ring.radius, "forearm_ring radius");
    finite_positive(c.forearm_ring.offset_from_elbow, "forearm_ring offset");
    finite_positive(c.motor.pulley_radius, "motor pulley_radius");
    finite_positive(c.motor.max_torque, "motor max_torque");
    finite_positive(c.motor.max_speed, "motor max_speed");

    const auto n = static_cast<std::size_t>(std::max(c.cable_count, 0));
    if (c.arm_ring.anchor_angles.size() != n)
        v.push_back("arm_ring anchor count " + std::to_string(c.arm_ring.anchor_angles.size()) +
                    " != cable_count");
    if (c.forearm_ring.anchor_angles.size() != n)
        v.push_back("forearm_ring anchor count " +
                    std::to_string(c.forearm_ring.anchor_angles.size()) + " != cable_count");
    if (c.routing.size() != n)
        v.push_back("routing count " + std::to_string(c.routing.size()) + " != cable_count");
    for (double a : c.arm_ring.anchor_angles)
        if (!std::isfinite(a)) v.push_back("arm_ring anchor angle must be finite");
    for (double a : c.forearm_ring.anchor_angles)
        if (!std::isfinite(a)) v.push_back("forearm_ring anchor angle must be finite");
    for (const auto& r : c.routing)
        if (const auto* g = std::get_if<ElbowGuide>(&r))
            finite_positive(g->guide_point_offset, "routing guide_point_offset");

    const auto& t = c.tension_limits;
    if (!(std::isfinite(t.t_min) && t.t_min >= 0.0)) v.push_back("t_min must be >= 0");
    if (!(std::isfinite(t.t_max) && t.t_max > t.t_min)) v.push_back("t_max must be > t_min");
    if (!(c.motor.efficiency > 0.0 && c.motor.efficiency <= 1.0))
        v.push_back("motor efficiency must be in (0, 1]");
    return v;
}

const DeviceConfig& validate_config(const DeviceConfig& config) {
    auto v = config_violations(config);
    if (!v.empty()) throw InvalidGeometry(std::move(v));
    return config;
}

Eigen::Vector3d forearm_axis(double alpha) {
    return {std::sin(alpha), 0.0, -std::cos(alpha)};
}

Eigen::Vector3d forearm_anterior(double alpha) {
    return {std::cos(alpha), 0.0, std::sin(alpha)};
}

Eigen::Vector3d guide_point(const ElbowGuide& guide) {
    return {guide.guide_point_offset, 0.0, 0.0};
}

std::vector<AnchorPair> anchor_positions(const DeviceConfig& config, const JointState& joint) {
    const Eigen::Vector3d f = forearm_axis(joint.alpha);
    const Eigen::Vector3d a = forearm_anterior(joint.alpha);
    const Eigen::Vector3d y = lateral_axis();
    const auto& arm = config.arm_ring;
    const auto& fore = config.forearm_ring;

    std::vector<AnchorPair> out;
    out.reserve(static_cast<std::size_t>(config.cable_count));
    for (std::size_t i = 0; i < static_cast<std::size_t>(config.cable_count); ++i) {
        const bool follows = std::holds_alternative<ForearmFollowing>(config.routing[i]);
        const double arm_angle = arm.anchor_angles[i] + (follows ? joint.beta : 0.0);
        const double fore_angle = fore.anchor_angles[i] + joint.beta;
        AnchorPair p;
        p.arm = {arm.radius * std::cos(arm_angle), arm.radius * std::sin(arm_angle),
                 arm.offset_from_elbow};
        p.forearm = fore.offset_from_elbow * f +
                    fore.radius * (std::cos(fore_angle) * a + std::sin(fore_angle) * y);
        out.push_back(p);
    }
    return out;
}

}  // namespace cadel
