#include "cadel/harness.hpp"

#include "cadel/errors.hpp"

#include <cmath>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cadel {

LoadSweep run_load_sweep(const ExperimentSpec& spec) {
    if (spec.loads_kg.empty()) throw std::invalid_argument("load list must be nonempty");
    std::vector<std::future<ExerciseRecord>> jobs;
    jobs.reserve(spec.loads_kg.size());
    for (double payload : spec.loads_kg) {
        LoadCase load = spec.base_load;
        load.payload_mass = payload;
        jobs.push_back(std::async(std::launch::async, [&spec, load] {
            return simulate_exercise(spec.device, load, spec.trajectory, spec.controller);
        }));
    }
    LoadSweep out;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        try {
            out.records.push_back(jobs[k].get());
        } catch (const Error& e) {
            out.failures.push_back({spec.loads_kg[k], e.what()});
        }
    }
    return out;
}

double reference_power(Version version) {
    switch (version) {
        case Version::Cadel: return 3.8;
        case Version::Cadel3: return 2.66;
        case Version::LCadel: return 2.0;
    }
    throw std::invalid_argument("unknown version");
}

Summary summarize(const std::vector<ExerciseRecord>& records, std::optional<Version> preset) {
    if (records.empty()) throw std::invalid_argument("summarize needs at least one record");
    Summary s;
    s.device = records.front().device;
    for (const auto& r : records)
        s.rows.push_back({r.load.payload_mass, r.summary.average_power,
                          r.summary.peak_motor_torque, rad2deg(r.summary.rms_tracking_error)});
    if (preset) s.reference_power_w = reference_power(*preset);
    return s;
}

std::string format_summary(const Summary& s) {
    std::ostringstream os;
    os << "device: " << s.device << '\n';
    os << std::left << std::setw(10) << "load_kg" << std::setw(14) << "avg_power_W"
       << std::setw(18) << "peak_torque0_Nm" << "rms_error_deg\n";
    os << std::fixed;
    for (const auto& r : s.rows) {
        os << std::setw(10) << std::setprecision(2) << r.payload_kg << std::setw(14)
           << std::setprecision(4) << r.average_power_w << std::setw(18) << r.peak_motor_torque_nm
           << std::setprecision(5) << r.rms_error_deg << '\n';
    }
    if (s.reference_power_w) {
        const double sim = s.rows.front().average_power_w;
        os << std::setprecision(3) << "reference power (prototype): " << *s.reference_power_w
           << " W; simulated at " << std::setprecision(2) << s.rows.front().payload_kg
           << " kg: " << std::setprecision(3) << sim << " W (ratio "
           << sim / *s.reference_power_w << ")\n";
    }
    return os.str();
}

std::string format_load(double payload_kg) {
    std::ostringstream os;
    if (std::abs(payload_kg * 10.0 - std::round(payload_kg * 10.0)) < 1e-9)
        os << std::fixed << std::setprecision(1) << payload_kg;
    else
        os << payload_kg;
    return os.str();
}

std::string record_file_name(const std::string& device, double payload_kg) {
    return device + "_" + format_load(payload_kg) + "kg.csv";
}

}  // namespace cadel
