#pragma once

#include "cadel/geometry.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace cadel {

/// Cable lengths plus, per cable, the unit direction of the segment attached
/// to the forearm anchor (pointing away from the forearm anchor).
struct CableLengths {
    std::vector<double> lengths;
    std::vector<Eigen::Vector3d> directions;
};

/// Cables shorter than this are treated as coincident anchors.
inline constexpr double kMinCableLength = 1e-6;

CableLengths inverse_kinematics(const DeviceConfig& config, const JointState& joint);

/// d(length_i)/d(alpha, beta), one row per cable (m/rad). Analytic.
Eigen::MatrixX2d cable_jacobian(const DeviceConfig& config, const JointState& joint);

struct FkOptions {
    double tolerance = 1e-9;  // max-norm of the length residual, m
    int max_iterations = 100;
};

/// Gauss-Newton on IK(alpha, beta) - lengths, starting from guess. Returns
/// the solution nearest the guess; rates in the result are zero.
/// Throws NoConvergence or DegenerateGeometry.
JointState forward_kinematics(const DeviceConfig& config, const std::vector<double>& lengths,
                              const JointState& guess, const FkOptions& options = {});

struct RomViolation {
    std::string axis;  // "alpha" or "beta"
    double value;
    double min;
    double max;
};

struct RomCheck {
    std::vector<RomViolation> violations;
    bool inside() const { return violations.empty(); }
};

/// Closed-interval check of both joint coordinates.
RomCheck check_rom(const JointState& joint, const RangeOfMotion& rom);

}  // namespace cadel
