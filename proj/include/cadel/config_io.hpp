#pragma once

// Device config files: a flat JSON object, SI units except angles (degrees).
//
//   {
//     "name": "lcadel",
//     "cable_count": 2,
//     "arm_ring.radius_m": 0.08,
//     "arm_ring.offset_m": 0.03,
//     "arm_ring.anchor_angles_deg": [20, -20],
//     "forearm_ring.radius_m": 0.05,
//     "forearm_ring.offset_m": 0.15,
//     "forearm_ring.anchor_angles_deg": [20, -20],
//     "routing": ["forearm_following", "forearm_following"],
//     "elbow_guide.offset_m": 0.09,
//     "motor.pulley_radius_m": 0.01,
//     "motor.max_torque_Nm": 1.5,
//     "motor.max_speed_deg_s": 360,
//     "motor.efficiency": 0.7,
//     "tension.t_min_N": 1,
//     "tension.t_max_N": 60
//   }
//
// Every key is required except "elbow_guide.offset_m", which is required only
// when some cable uses "elbow_guide" routing. Unknown keys are rejected.

#include "cadel/geometry.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace cadel {

/// Malformed or incomplete config document.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses and validates. Throws ConfigError or InvalidGeometry.
DeviceConfig parse_config(const std::string& text);
DeviceConfig load_config(const std::filesystem::path& path);

/// Pretty-printed document that parse_config accepts.
std::string dump_config(const DeviceConfig& config);
void save_config(const DeviceConfig& config, const std::filesystem::path& path);

}  // namespace cadel
