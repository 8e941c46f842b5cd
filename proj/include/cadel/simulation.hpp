#pragma once

#include "cadel/geometry.hpp"
#include "cadel/statics.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cadel {

struct ControllerConfig {
    double kp = 40.0;            // N*m/rad
    double kd = 4.0;             // N*m*s/rad
    double dt = 0.006;           // s, control period == integration step
    double torque_limit = 20.0;  // N*m, command saturation
};

void validate_controller(const ControllerConfig& ctl);

/// Joint losses of the test-bench arm.
struct PlantParams {
    double damping = 0.05;  // N*m*s/rad
};

enum class Profile { MinimumJerk };

/// One cycle: rise start->end, hold, return end->start, hold.
struct TrajectorySpec {
    double alpha_start = 0.0;
    double alpha_end = deg2rad(60.0);
    double rise_time = 1.5;  // s
    double hold_time = 0.5;  // s
    int cycles = 1;
    Profile profile = Profile::MinimumJerk;
};

double trajectory_duration(const TrajectorySpec& spec);

/// Throws std::invalid_argument for bad timing and RoMViolation when an
/// endpoint lies outside rom.
void validate_trajectory(const TrajectorySpec& spec, const RangeOfMotion& rom = human_rom());

struct DesiredSample {
    double alpha;
    double alpha_dot;
};

/// Desired position/velocity at time t (clamped to the trajectory end).
DesiredSample desired_at(const TrajectorySpec& spec, double t);

struct Trajectory {
    std::vector<double> time;
    std::vector<double> alpha;
    std::vector<double> alpha_dot;
};

/// Number of samples: floor(duration / dt) + 1.
std::size_t sample_count(double duration, double dt);

Trajectory generate_trajectory(const TrajectorySpec& spec, double dt,
                               const RangeOfMotion& rom = human_rom());

/// Rod forearm plus point payload about the elbow.
double joint_inertia(const LoadCase& load);

/// Semi-implicit Euler step of the single-DoF forearm; beta is held.
JointState plant_step(const JointState& state, double applied_torque, const LoadCase& load,
                      double dt, const PlantParams& plant = {});

struct ExerciseSample {
    double t;
    double alpha_desired;
    double alpha;
    double beta;
    std::vector<double> lengths;
    std::vector<double> tensions;
    std::vector<double> motor_torques;
    double power;  // W, electrical-side, nonnegative
};

struct ExerciseSummary {
    double duration = 0.0;           // s
    double average_power = 0.0;      // W
    double peak_motor_torque = 0.0;  // N*m, cable 0 (right side)
    double rms_tracking_error = 0.0; // rad
};

struct ExerciseRecord {
    std::string device;
    int cable_count = 0;
    LoadCase load;
    double dt = 0.0;
    std::vector<ExerciseSample> samples;
    ExerciseSummary summary;
};

/// Runs the PD + gravity feedforward exercise. Throws Infeasible tagged with
/// the step index when the tension distribution fails.
ExerciseRecord simulate_exercise(const DeviceConfig& config, const LoadCase& load,
                                 const TrajectorySpec& traj, const ControllerConfig& ctl,
                                 const PlantParams& plant = {});

}  // namespace cadel
