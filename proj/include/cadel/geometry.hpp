#pragma once

// Device geometry for the two-ring cable-driven elbow devices.
//
// World frame (fixed to the arm ring):
//   origin  elbow center
//   x       anterior
//   y       lateral
//   z       upper-arm axis, pointing proximal
// At alpha = 0 the arm is straight and the forearm axis points along -z.
// Flexion (alpha > 0) swings the forearm toward +x, i.e. about -y.
// On the test bench the arm lies horizontal with gravity along -x, so
// alpha = 0 is the horizontal forearm and flexion lifts the load.

#include <Eigen/Core>

#include <array>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cadel {

inline constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

struct RingSpec {
    double radius = 0.0;             // m
    double offset_from_elbow = 0.0;  // m along the segment axis
    std::vector<double> anchor_angles;  // rad, 0 = anterior, +pi/2 = lateral (+y)
};

/// Straight segment from the arm anchor to the forearm anchor.
struct Direct {
    bool operator==(const Direct&) const = default;
};

/// Cable redirected through a point pulley fixed to the arm frame at
/// (guide_point_offset, 0, 0), i.e. anterior of the elbow center.
struct ElbowGuide {
    double guide_point_offset = 0.090;  // m
    bool operator==(const ElbowGuide&) const = default;
};

/// Arm-side actuator travels around the arm ring so that its anchor angle
/// follows forearm rotation beta.
struct ForearmFollowing {
    bool operator==(const ForearmFollowing&) const = default;
};

using Routing = std::variant<Direct, ElbowGuide, ForearmFollowing>;

struct MotorSpec {
    double pulley_radius = 0.010;       // m
    double max_torque = 1.5;            // N*m
    double max_speed = deg2rad(360.0);  // rad/s
    double efficiency = 0.7;            // (0, 1]
};

struct TensionLimits {
    double t_min = 1.0;   // N, pretension
    double t_max = 60.0;  // N
};

struct DeviceConfig {
    std::string name;
    int cable_count = 0;
    RingSpec arm_ring;
    RingSpec forearm_ring;
    std::vector<Routing> routing;
    MotorSpec motor;
    TensionLimits tension_limits;
};

bool operator==(const RingSpec& a, const RingSpec& b);
bool operator==(const MotorSpec& a, const MotorSpec& b);
bool operator==(const TensionLimits& a, const TensionLimits& b);
bool operator==(const DeviceConfig& a, const DeviceConfig& b);

struct JointState {
    double alpha = 0.0;  // rad, flexion positive, 0 = straight arm / horizontal forearm
    double beta = 0.0;   // rad, forearm rotation, 0 = neutral
    double alpha_dot = 0.0;
    double beta_dot = 0.0;
};

struct RangeOfMotion {
    double alpha_min, alpha_max;
    double beta_min, beta_max;
};

/// Average human elbow/forearm range: flexion/extension +-60 deg, pronosupination +-50 deg.
RangeOfMotion human_rom();

enum class Version { Cadel, Cadel3, LCadel };

inline constexpr std::array<Version, 3> all_versions{Version::Cadel, Version::Cadel3,
                                                     Version::LCadel};

std::string_view version_name(Version v);
/// Parses "cadel" / "cadel3" / "lcadel" (case-insensitive, '.' and '-' ignored).
/// Throws std::invalid_argument otherwise.
Version parse_version(std::string_view name);

/// Presets. Cable 0 is the "right-side" cable by convention:
///   CADEL   4 cables, all Direct: anterior (0), lateral (+90), posterior (180), medial (-90)
///   CADEL3  same layout, anterior cable through the elbow guide
///   LCADEL  2 cables at +20 / -20 deg, ForearmFollowing
DeviceConfig build_preset(Version version);

/// Every violated invariant, empty when the config is valid.
std::vector<std::string> config_violations(const DeviceConfig& config);

/// Returns the config unchanged or throws InvalidGeometry listing every violation.
const DeviceConfig& validate_config(const DeviceConfig& config);

struct AnchorPair {
    Eigen::Vector3d arm;
    Eigen::Vector3d forearm;
};

/// Forearm axis and anterior direction at flexion angle alpha.
Eigen::Vector3d forearm_axis(double alpha);
Eigen::Vector3d forearm_anterior(double alpha);
inline Eigen::Vector3d lateral_axis() { return Eigen::Vector3d::UnitY(); }
/// Unit axis about which positive alpha rotates the forearm.
inline Eigen::Vector3d flexion_axis() { return -Eigen::Vector3d::UnitY(); }

/// World-frame anchor points of every cable. The forearm ring is worn on the
/// forearm so its anchors always turn with beta; ForearmFollowing cables
/// additionally move their arm anchor by beta.
std::vector<AnchorPair> anchor_positions(const DeviceConfig& config, const JointState& joint);

/// Guide point for an ElbowGuide-routed cable (arm frame, constant).
Eigen::Vector3d guide_point(const ElbowGuide& guide);

}  // namespace cadel
