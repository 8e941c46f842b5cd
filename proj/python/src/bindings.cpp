#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cadel/config_io.hpp"
#include "cadel/errors.hpp"
#include "cadel/geometry.hpp"
#include "cadel/harness.hpp"
#include "cadel/kinematics.hpp"
#include "cadel/simulation.hpp"
#include "cadel/statics.hpp"
#include "cadel/workspace.hpp"

namespace py = pybind11;
using namespace cadel;

namespace {

void bind_geometry(py::module_& m) {
    py::enum_<Version>(m, "Version")
        .value("CADEL", Version::Cadel)
        .value("CADEL3", Version::Cadel3)
        .value("LCADEL", Version::LCadel);

    py::class_<RingSpec>(m, "RingSpec")
        .def(py::init<>())
        .def_readwrite("radius", &RingSpec::radius)
        .def_readwrite("offset_from_elbow", &RingSpec::offset_from_elbow)
        .def_readwrite("anchor_angles", &RingSpec::anchor_angles);

    py::class_<MotorSpec>(m, "MotorSpec")
        .def(py::init<>())
        .def_readwrite("pulley_radius", &MotorSpec::pulley_radius)
        .def_readwrite("max_torque", &MotorSpec::max_torque)
        .def_readwrite("max_speed", &MotorSpec::max_speed)
        .def_readwrite("efficiency", &MotorSpec::efficiency);

    py::class_<TensionLimits>(m, "TensionLimits")
        .def(py::init<>())
        .def_readwrite("t_min", &TensionLimits::t_min)
        .def_readwrite("t_max", &TensionLimits::t_max);

    // Routing is exposed as strings; the guide offset lives on the config.
    py::class_<DeviceConfig>(m, "DeviceConfig")
        .def(py::init<>())
        .def_readwrite("name", &DeviceConfig::name)
        .def_readwrite("cable_count", &DeviceConfig::cable_count)
        .def_readwrite("arm_ring", &DeviceConfig::arm_ring)
        .def_readwrite("forearm_ring", &DeviceConfig::forearm_ring)
        .def_readwrite("motor", &DeviceConfig::motor)
        .def_readwrite("tension_limits", &DeviceConfig::tension_limits)
        .def_property_readonly("routing",
                               [](const DeviceConfig& c) {
                                   std::vector<std::string> out;
                                   for (const auto& r : c.routing)
                                       out.push_back(std::visit(
                                           [](const auto& v) -> std::string {
                                               using T = std::decay_t<decltype(v)>;
                                               if constexpr (std::is_same_v<T, Direct>) return "direct";
                                               else if constexpr (std::is_same_v<T, ElbowGuide>)
                                                   return "elbow_guide";
                                               else return "forearm_following";
                                           },
                                           r));
                                   return out;
                               })
        .def("to_json", &dump_config)
        .def_static("from_json", &parse_config)
        .def("__eq__", [](const DeviceConfig& a, const DeviceConfig& b) { return a == b; });

    py::class_<JointState>(m, "JointState")
        .def(py::init([](double alpha, double beta) { return JointState{alpha, beta}; }),
             py::arg("alpha") = 0.0, py::arg("beta") = 0.0)
        .def_readwrite("alpha", &JointState::alpha)
        .def_readwrite("beta", &JointState::beta)
        .def_readwrite("alpha_dot", &JointState::alpha_dot)
        .def_readwrite("beta_dot", &JointState::beta_dot)
        .def("__repr__", [](const JointState& j) {
            return "JointState(alpha=" + std::to_string(j.alpha) + ", beta=" + std::to_string(j.beta) + ")";
        });

    m.def("build_preset", &build_preset);
    m.def("parse_version", &parse_version);
    m.def("config_violations", &config_violations);
    m.def("validate_config", [](const DeviceConfig& c) { validate_config(c); });
    m.def("deg2rad", &deg2rad);
    m.def("rad2deg", &rad2deg);
}

void bind_kinematics(py::module_& m) {
    m.def(
        "inverse_kinematics",
        [](const DeviceConfig& c, const JointState& j) { return inverse_kinematics(c, j).lengths; },
        "Cable lengths in meters.");
    m.def("cable_jacobian", &cable_jacobian);
    m.def(
        "forward_kinematics",
        [](const DeviceConfig& c, const std::vector<double>& lengths, const JointState& guess) {
            return forward_kinematics(c, lengths, guess);
        },
        py::arg("config"), py::arg("lengths"), py::arg("guess") = JointState{});
}

void bind_statics(py::module_& m) {
    py::class_<LoadCase>(m, "LoadCase")
        .def(py::init<>())
        .def_readwrite("forearm_mass", &LoadCase::forearm_mass)
        .def_readwrite("payload_mass", &LoadCase::payload_mass)
        .def_readwrite("forearm_com_distance", &LoadCase::forearm_com_distance)
        .def_readwrite("payload_distance", &LoadCase::payload_distance)
        .def_readwrite("gravity", &LoadCase::gravity)
        .def_readwrite("forearm_length", &LoadCase::forearm_length);

    py::class_<CableSolution>(m, "CableSolution")
        .def_readonly("tensions", &CableSolution::tensions)
        .def_readonly("motor_torques", &CableSolution::motor_torques)
        .def_readonly("residual_wrench", &CableSolution::residual_wrench);

    m.def("bench_load", &bench_load);
    m.def("gravity_torque", &gravity_torque);
    m.def("structure_rows", &structure_rows);
    m.def("tension_distribution",
          py::overload_cast<const DeviceConfig&, const JointState&, const Wrench&>(
              &tension_distribution));
    m.def("wrench_feasible", &wrench_feasible);
}

void bind_simulation(py::module_& m) {
    py::class_<ControllerConfig>(m, "ControllerConfig")
        .def(py::init<>())
        .def_readwrite("kp", &ControllerConfig::kp)
        .def_readwrite("kd", &ControllerConfig::kd)
        .def_readwrite("dt", &ControllerConfig::dt)
        .def_readwrite("torque_limit", &ControllerConfig::torque_limit);

    py::class_<TrajectorySpec>(m, "TrajectorySpec")
        .def(py::init<>())
        .def_readwrite("alpha_start", &TrajectorySpec::alpha_start)
        .def_readwrite("alpha_end", &TrajectorySpec::alpha_end)
        .def_readwrite("rise_time", &TrajectorySpec::rise_time)
        .def_readwrite("hold_time", &TrajectorySpec::hold_time)
        .def_readwrite("cycles", &TrajectorySpec::cycles);

    py::class_<ExerciseSummary>(m, "ExerciseSummary")
        .def_readonly("duration", &ExerciseSummary::duration)
        .def_readonly("average_power", &ExerciseSummary::average_power)
        .def_readonly("peak_motor_torque", &ExerciseSummary::peak_motor_torque)
        .def_readonly("rms_tracking_error", &ExerciseSummary::rms_tracking_error);

    py::class_<ExerciseRecord>(m, "ExerciseRecord")
        .def_readonly("device", &ExerciseRecord::device)
        .def_readonly("cable_count", &ExerciseRecord::cable_count)
        .def_readonly("dt", &ExerciseRecord::dt)
        .def_readonly("summary", &ExerciseRecord::summary)
        .def_property_readonly("time",
                               [](const ExerciseRecord& r) {
                                   std::vector<double> v;
                                   for (const auto& s : r.samples) v.push_back(s.t);
                                   return v;
                               })
        .def_property_readonly("alpha",
                               [](const ExerciseRecord& r) {
                                   std::vector<double> v;
                                   for (const auto& s : r.samples) v.push_back(s.alpha);
                                   return v;
                               })
        .def_property_readonly("tensions", [](const ExerciseRecord& r) {
            std::vector<std::vector<double>> v;
            for (const auto& s : r.samples) v.push_back(s.tensions);
            return v;
        });

    m.def("simulate_exercise",
          [](const DeviceConfig& c, const LoadCase& load, const TrajectorySpec& traj,
             const ControllerConfig& ctl) { return simulate_exercise(c, load, traj, ctl); },
          py::arg("config"), py::arg("load"), py::arg("trajectory") = TrajectorySpec{},
          py::arg("controller") = ControllerConfig{});
}

void bind_workspace(py::module_& m) {
    py::class_<WorkspaceGrid>(m, "WorkspaceGrid")
        .def_readonly("alpha", &WorkspaceGrid::alpha)
        .def_readonly("beta", &WorkspaceGrid::beta)
        .def_readonly("feasible", &WorkspaceGrid::feasible)
        .def_readonly("total_tension", &WorkspaceGrid::total_tension)
        .def("feasible_fraction", &WorkspaceGrid::feasible_fraction);

    py::class_<CosineFit>(m, "CosineFit")
        .def_readonly("amplitude", &CosineFit::amplitude)
        .def_readonly("relative_residual", &CosineFit::relative_residual);

    m.def("workspace_map",
          [](const DeviceConfig& c, const LoadCase& load, std::size_t na, std::size_t nb) {
              return workspace_map(c, load, na, nb);
          },
          py::arg("config"), py::arg("load"), py::arg("alpha_samples") = 61,
          py::arg("beta_samples") = 51);
    m.def("fit_cosine", &fit_cosine);
}

}  // namespace

PYBIND11_MODULE(_cadel, m) {
    m.doc() = "Cable-driven elbow device kinematics, statics and exercise simulation";

    auto error = py::register_exception<Error>(m, "CadelError");
    py::register_exception<InvalidGeometry>(m, "InvalidGeometry", error.ptr());
    py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", error.ptr());
    py::register_exception<NoConvergence>(m, "NoConvergence", error.ptr());
    py::register_exception<Infeasible>(m, "Infeasible", error.ptr());
    py::register_exception<RoMViolation>(m, "RoMViolation", error.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    bind_geometry(m);
    bind_kinematics(m);
    bind_statics(m);
    bind_simulation(m);
    bind_workspace(m);
}
