#pragma once

#include "cadel/geometry.hpp"
#include "cadel/simulation.hpp"
#include "cadel/statics.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cadel {

/// Payloads of the bench protocol, kg.
inline const std::vector<double> kProtocolLoads{0.5, 1.0, 1.5, 2.5};

struct ExperimentSpec {
    DeviceConfig device;
    std::optional<Version> preset;  // set when the device came from a preset
    std::vector<double> loads_kg = kProtocolLoads;
    LoadCase base_load;             // forearm parameters; payload_mass is overridden
    TrajectorySpec trajectory;
    ControllerConfig controller;
    std::filesystem::path output_dir;
};

struct SweepFailure {
    double payload_kg;
    std::string message;
};

struct LoadSweep {
    std::vector<ExerciseRecord> records;  // successful runs, in loads_kg order
    std::vector<SweepFailure> failures;   // runs that raised a cadel::Error
};

/// One simulation per payload, run concurrently. Domain errors of individual runs are
/// collected instead of aborting the sweep.
LoadSweep run_load_sweep(const ExperimentSpec& spec);

/// Measured electrical power of each physical prototype, W.
double reference_power(Version version);

struct SummaryRow {
    double payload_kg;
    double average_power_w;
    double peak_motor_torque_nm;
    double rms_error_deg;
};

struct Summary {
    std::string device;
    std::vector<SummaryRow> rows;
    std::optional<double> reference_power_w;
};

/// Throws std::invalid_argument for an empty record list.
Summary summarize(const std::vector<ExerciseRecord>& records,
                  std::optional<Version> preset = std::nullopt);

/// Human-readable table plus the reference-power comparison line.
std::string format_summary(const Summary& summary);

/// "{device}_{load}kg.csv", e.g. "lcadel_0.5kg.csv".
std::string record_file_name(const std::string& device, double payload_kg);
std::string format_load(double payload_kg);

/// CLI entry point. Exit codes: 0 ok, 1 domain error, 2 usage/config error.
int cli_main(int argc, const char* const* argv);

}  // namespace cadel
