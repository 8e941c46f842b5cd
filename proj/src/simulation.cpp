#include "cadel/simulation.hpp"

#include "cadel/errors.hpp"
#include "cadel/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cadel {

void validate_controller(const ControllerConfig& ctl) {
    if (!(ctl.kp > 0.0)) throw std::invalid_argument("kp must be > 0");
    if (!(ctl.kd >= 0.0)) throw std::invalid_argument("kd must be >= 0");
    if (!(ctl.dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    if (!(ctl.torque_limit > 0.0)) throw std::invalid_argument("torque_limit must be > 0");
}

double trajectory_duration(const TrajectorySpec& spec) {
    return spec.cycles * 2.0 * (spec.rise_time + spec.hold_time);
}

void validate_trajectory(const TrajectorySpec& spec, const RangeOfMotion& rom) {
    if (!(spec.rise_time > 0.0)) throw std::invalid_argument("rise_time must be > 0");
    if (!(spec.hold_time >= 0.0)) throw std::invalid_argument("hold_time must be >= 0");
    if (spec.cycles < 1) throw std::invalid_argument("cycles must be >= 1");
    for (double a : {spec.alpha_start, spec.alpha_end}) {
        if (!(a >= rom.alpha_min && a <= rom.alpha_max))
            throw RoMViolation("trajectory endpoint " + std::to_string(rad2deg(a)) +
                               " deg outside [" + std::to_string(rad2deg(rom.alpha_min)) + ", " +
                               std::to_string(rad2deg(rom.alpha_max)) + "] deg");
    }
}

namespace {

// Minimum-jerk blend from a to b over duration T at local time s in [0, T].
DesiredSample min_jerk(double a, double b, double T, double s) {
    const double tau = std::clamp(s / T, 0.0, 1.0);
    const double t2 = tau * tau;
    const double t3 = t2 * tau;
    const double pos = 10.0 * t3 - 15.0 * t3 * tau + 6.0 * t3 * t2;
    const double vel = (30.0 * t2 - 60.0 * t3 + 30.0 * t2 * t2) / T;
    return {a + (b - a) * pos, (b - a) * vel};
}

}  // namespace

DesiredSample desired_at(const TrajectorySpec& spec, double t) {
    const double rise = spec.rise_time;
    const double hold = spec.hold_time;
    const double cycle = 2.0 * (rise + hold);
    if (t <= 0.0) return {spec.alpha_start, 0.0};
    if (t >= cycle * spec.cycles) return {spec.alpha_start, 0.0};
    const double s = std::fmod(t, cycle);
    if (s < rise) return min_jerk(spec.alpha_start, spec.alpha_end, rise, s);
    if (s < rise + hold) return {spec.alpha_end, 0.0};
    if (s < 2.0 * rise + hold)
        return min_jerk(spec.alpha_end, spec.alpha_start, rise, s - rise - hold);
    return {spec.alpha_start, 0.0};
}

std::size_t sample_count(double duration, double dt) {
    return static_cast<std::size_t>(std::floor(duration / dt + 1e-9)) + 1;
}

Trajectory generate_trajectory(const TrajectorySpec& spec, double dt, const RangeOfMotion& rom) {
    validate_trajectory(spec, rom);
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    const std::size_t n = sample_count(trajectory_duration(spec), dt);
    Trajectory out;
    out.time.reserve(n);
    out.alpha.reserve(n);
    out.alpha_dot.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * dt;
        const DesiredSample d = desired_at(spec, t);
        out.time.push_back(t);
        out.alpha.push_back(d.alpha);
        out.alpha_dot.push_back(d.alpha_dot);
    }
    return out;
}

double joint_inertia(const LoadCase& load) {
    return load.forearm_mass * load.forearm_length * load.forearm_length / 3.0 +
           load.payload_mass * load.payload_distance * load.payload_distance;
}

JointState plant_step(const JointState& state, double applied_torque, const LoadCase& load,
                      double dt, const PlantParams& plant) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    const double inertia = joint_inertia(load);
    const double accel =
        (applied_torque - gravity_torque(load, state.alpha) - plant.damping * state.alpha_dot) /
        inertia;
    JointState next = state;
    next.alpha_dot = state.alpha_dot + dt * accel;
    next.alpha = state.alpha + dt * next.alpha_dot;
    next.beta_dot = 0.0;
    return next;
}

ExerciseRecord simulate_exercise(const DeviceConfig& config, const LoadCase& load,
                                 const TrajectorySpec& traj, const ControllerConfig& ctl,
                                 const PlantParams& plant) {
    validate_config(config);
    validate_load(load);
    validate_controller(ctl);
    validate_trajectory(traj);

    const double duration = trajectory_duration(traj);
    const std::size_t n = sample_count(duration, ctl.dt);
    const double efficiency = config.motor.efficiency;

    ExerciseRecord rec;
    rec.device = config.name;
    rec.cable_count = config.cable_count;
    rec.load = load;
    rec.dt = ctl.dt;
    rec.samples.reserve(n);

    JointState state{traj.alpha_start, 0.0, 0.0, 0.0};
    double energy = 0.0;
    double err2 = 0.0;
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * ctl.dt;
        const DesiredSample des = desired_at(traj, t);
        double command = gravity_torque(load, des.alpha) + ctl.kp * (des.alpha - state.alpha) +
                         ctl.kd * (des.alpha_dot - state.alpha_dot);
        command = std::clamp(command, -ctl.torque_limit, ctl.torque_limit);

        const Eigen::Matrix2Xd structure = structure_rows(config, state);
        CableSolution sol;
        try {
            sol = tension_distribution(config, structure, Wrench(command, 0.0));
        } catch (const Infeasible& e) {
            throw e.at_step(k);
        }
        const CableLengths ik = inverse_kinematics(config, state);
        const Eigen::MatrixX2d jac = cable_jacobian(config, state);

        ExerciseSample row;
        row.t = t;
        row.alpha_desired = des.alpha;
        row.alpha = state.alpha;
        row.beta = state.beta;
        row.lengths = ik.lengths;
        row.tensions = sol.tensions;
        row.motor_torques = sol.motor_torques;
        row.power = 0.0;
        for (std::size_t i = 0; i < sol.tensions.size(); ++i) {
            const auto r = static_cast<Eigen::Index>(i);
            const double length_rate = jac(r, 0) * state.alpha_dot + jac(r, 1) * state.beta_dot;
            row.power += std::max(0.0, sol.tensions[i] * -length_rate);
        }
        row.power /= efficiency;

        energy += row.power * ctl.dt;
        err2 += (des.alpha - state.alpha) * (des.alpha - state.alpha);
        peak = std::max(peak, row.motor_torques.front());
        rec.samples.push_back(std::move(row));

        const double applied = delivered_wrench(config, structure, sol.tensions)(0);
        state = plant_step(state, applied, load, ctl.dt, plant);
    }

    rec.summary.duration = duration;
    rec.summary.average_power = energy / duration;
    rec.summary.peak_motor_torque = peak;
    rec.summary.rms_tracking_error = std::sqrt(err2 / static_cast<double>(n));
    return rec;
}

}  // namespace cadel
