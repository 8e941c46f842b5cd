#pragma once

#include "cadel/geometry.hpp"

#include <Eigen/Core>

#include <vector>

namespace cadel {

struct LoadCase {
    double forearm_mass = 1.0;            // kg
    double payload_mass = 0.0;            // kg
    double forearm_com_distance = 0.11;   // m from elbow
    double payload_distance = 0.25;       // m from elbow
    double gravity = 9.81;                // m/s^2
    double forearm_length = 0.25;         // m, used for the rod inertia
};

/// Harness anthropometrics with the given payload.
LoadCase bench_load(double payload_kg);

/// Throws std::invalid_argument when masses < 0 or distances/gravity <= 0.
void validate_load(const LoadCase& load);

/// Torque the cables must supply about the flexion axis to hold the forearm
/// statically: (m_f*d_f + m_p*d_p) * g * cos(alpha).
double gravity_torque(const LoadCase& load, double alpha);

/// (flexion torque, lateral moment), N*m.
using Wrench = Eigen::Vector2d;

/// 2 x n structure matrix. Row 0: moment about the flexion axis per newton of
/// cable i; row 1: moment about the forearm anterior axis (out-of-sagittal).
Eigen::Matrix2Xd structure_rows(const DeviceConfig& config, const JointState& joint);

struct CableSolution {
    std::vector<double> tensions;       // N
    std::vector<double> motor_torques;  // N*m at the motor shaft
    Wrench residual_wrench = Wrench::Zero();
};

/// Wrench delivered by a tension vector. Pretension is reacted by the device
/// structure, so only tension above t_min acts on the forearm:
/// A * (t - t_min).
Wrench delivered_wrench(const DeviceConfig& config, const Eigen::Matrix2Xd& structure,
                        const std::vector<double>& tensions);

/// Minimum sum (t_i - t_min)^2 tension vector with t_min <= t <= t_max that
/// delivers the demanded wrench. Throws Infeasible (with the distance of the
/// demand from the reachable wrench set) or DegenerateGeometry.
CableSolution tension_distribution(const DeviceConfig& config, const JointState& joint,
                                   const Wrench& demand);

/// Same, with a precomputed structure matrix.
CableSolution tension_distribution(const DeviceConfig& config,
                                   const Eigen::Matrix2Xd& structure, const Wrench& demand);

/// Distance from the demand to the set {A u : 0 <= u <= u_max} (zero inside).
double wrench_set_distance(const Eigen::Matrix2Xd& structure, const Eigen::VectorXd& u_max,
                           const Wrench& demand);

/// True iff the gravity demand (gravity_torque, 0) can be distributed.
bool wrench_feasible(const DeviceConfig& config, const JointState& joint, const LoadCase& load);

}  // namespace cadel
