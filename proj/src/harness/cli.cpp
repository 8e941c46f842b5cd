#include "cadel/config_io.hpp"
#include "cadel/errors.hpp"
#include "cadel/harness.hpp"
#include "cadel/kinematics.hpp"
#include "cadel/report.hpp"
#include "cadel/workspace.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace cadel {

namespace fs = std::filesystem;

namespace {

struct DeviceOptions {
    std::string preset = "lcadel";
    std::string config;
};

struct ExerciseOptions {
    double alpha_start_deg = 0.0;
    double alpha_end_deg = 60.0;
    double rise_s = 1.5;
    double hold_s = 0.5;
    int cycles = 1;
    double kp = 40.0;
    double kd = 4.0;
    double dt_s = 0.006;
    double torque_limit = 20.0;
};

struct OutputOptions {
    std::string dir;
    bool svg = false;
};

struct ResolvedDevice {
    DeviceConfig config;
    std::optional<Version> preset;
};

void add_device_options(CLI::App* cmd, DeviceOptions& o) {
    auto* p = cmd->add_option("--preset", o.preset, "cadel | cadel3 | lcadel")
                  ->capture_default_str();
    cmd->add_option("--config", o.config, "device config file (overrides --preset)")
        ->excludes(p);
}

void add_exercise_options(CLI::App* cmd, ExerciseOptions& o) {
    cmd->add_option("--alpha-start", o.alpha_start_deg, "deg")->capture_default_str();
    cmd->add_option("--alpha-end", o.alpha_end_deg, "deg")->capture_default_str();
    cmd->add_option("--rise", o.rise_s, "minimum-jerk segment duration, s")->capture_default_str();
    cmd->add_option("--hold", o.hold_s, "hold at each end, s")->capture_default_str();
    cmd->add_option("--cycles", o.cycles)->capture_default_str();
    cmd->add_option("--kp", o.kp, "N*m/rad")->capture_default_str();
    cmd->add_option("--kd", o.kd, "N*m*s/rad")->capture_default_str();
    cmd->add_option("--dt", o.dt_s, "control/integration step, s")->capture_default_str();
    cmd->add_option("--torque-limit", o.torque_limit, "N*m")->capture_default_str();
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--out", o.dir, "output directory (default $CADEL_SIM_OUT or ./cadel_out)");
    cmd->add_flag("--svg", o.svg, "also write SVG plots");
}

ResolvedDevice resolve_device(const DeviceOptions& o) {
    if (!o.config.empty()) return {load_config(o.config), std::nullopt};
    const Version v = parse_version(o.preset);
    return {build_preset(v), v};
}

TrajectorySpec make_trajectory(const ExerciseOptions& o) {
    TrajectorySpec t;
    t.alpha_start = deg2rad(o.alpha_start_deg);
    t.alpha_end = deg2rad(o.alpha_end_deg);
    t.rise_time = o.rise_s;
    t.hold_time = o.hold_s;
    t.cycles = o.cycles;
    return t;
}

ControllerConfig make_controller(const ExerciseOptions& o) {
    return {o.kp, o.kd, o.dt_s, o.torque_limit};
}

fs::path output_dir(const OutputOptions& o) {
    fs::path dir = "cadel_out";
    if (!o.dir.empty())
        dir = o.dir;
    else if (const char* env = std::getenv("CADEL_SIM_OUT"); env && *env)
        dir = env;
    fs::create_directories(dir);
    return dir;
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& writer) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    writer(out);
}

void write_record(const fs::path& dir, const ExerciseRecord& r, bool svg) {
    const fs::path csv = dir / record_file_name(r.device, r.load.payload_mass);
    write_file(csv, [&](std::ostream& os) { write_exercise_csv(r, os); });
    std::cout << "wrote " << csv.string() << '\n';
    if (!svg) return;
    PlotSeries des{"desired", {}, {}}, act{"executed", {}, {}};
    for (const auto& s : r.samples) {
        des.x.push_back(s.t);
        des.y.push_back(rad2deg(s.alpha_desired));
        act.x.push_back(s.t);
        act.y.push_back(rad2deg(s.alpha));
    }
    fs::path plot = csv;
    plot.replace_extension(".svg");
    write_file(plot, [&](std::ostream& os) {
        write_svg_plot(os, r.device + " elbow trajectory, " + format_load(r.load.payload_mass) +
                               " kg", "time [s]", "alpha [deg]", {des, act});
    });
}

int run_preset_list(const std::string& dump_dir) {
    for (Version v : all_versions) {
        const DeviceConfig c = build_preset(v);
        std::cout << version_name(v) << "  cables=" << c.cable_count
                  << "  reference_power_W=" << reference_power(v) << '\n';
        if (!dump_dir.empty()) {
            fs::create_directories(dump_dir);
            const fs::path path = fs::path(dump_dir) / (c.name + ".json");
            save_config(c, path);
            std::cout << "  wrote " << path.string() << '\n';
        }
    }
    return 0;
}

int run_validate(const std::string& path) {
    const DeviceConfig c = load_config(path);
    std::cout << "ok: " << c.name << " (" << c.cable_count << " cables)\n";
    return 0;
}

int run_ik(const DeviceOptions& dev, double alpha_deg, double beta_deg) {
    const auto d = resolve_device(dev);
    const JointState joint{deg2rad(alpha_deg), deg2rad(beta_deg), 0.0, 0.0};
    const auto rom = check_rom(joint, human_rom());
    for (const auto& v : rom.violations)
        std::cerr << "warning: " << v.axis << " = " << rad2deg(v.value)
                  << " deg outside the human range of motion\n";
    const CableLengths ik = inverse_kinematics(d.config, joint);
    const Eigen::MatrixX2d jac = cable_jacobian(d.config, joint);
    std::cout << std::setprecision(12);
    for (std::size_t i = 0; i < ik.lengths.size(); ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        std::cout << "cable " << i << ": length_m=" << ik.lengths[i]
                  << " dl_dalpha_m_per_rad=" << jac(r, 0) << " dl_dbeta_m_per_rad=" << jac(r, 1)
                  << '\n';
    }
    return 0;
}

LoadCase base_load(double forearm_mass) {
    LoadCase l;
    l.forearm_mass = forearm_mass;
    return l;
}

int run_simulate(const DeviceOptions& dev, const ExerciseOptions& ex, const OutputOptions& out,
                 double payload, double forearm_mass) {
    const auto d = resolve_device(dev);
    LoadCase load = base_load(forearm_mass);
    load.payload_mass = payload;
    const ExerciseRecord rec =
        simulate_exercise(d.config, load, make_trajectory(ex), make_controller(ex));
    write_record(output_dir(out), rec, out.svg);
    std::cout << format_summary(summarize({rec}, d.preset));
    return 0;
}

int run_sweep(const DeviceOptions& dev, const ExerciseOptions& ex, const OutputOptions& out,
              const std::vector<double>& loads, double forearm_mass) {
    const auto d = resolve_device(dev);
    ExperimentSpec spec;
    spec.device = d.config;
    spec.preset = d.preset;
    spec.loads_kg = loads;
    spec.base_load = base_load(forearm_mass);
    spec.trajectory = make_trajectory(ex);
    spec.controller = make_controller(ex);
    spec.output_dir = output_dir(out);

    const LoadSweep sweep = run_load_sweep(spec);
    for (const auto& f : sweep.failures)
        std::cerr << format_load(f.payload_kg) << " kg: " << f.message << '\n';
    if (sweep.records.empty()) return 1;
    const auto& records = sweep.records;
    for (const auto& r : records) write_record(spec.output_dir, r, out.svg);
    const std::string table = format_summary(summarize(records, d.preset));
    const fs::path summary_path = spec.output_dir / (d.config.name + "_summary.txt");
    write_file(summary_path, [&](std::ostream& os) { os << table; });
    if (out.svg) {
        std::vector<PlotSeries> series;
        for (const auto& r : records) {
            PlotSeries s{format_load(r.load.payload_mass) + " kg", {}, {}};
            for (const auto& row : r.samples) {
                s.x.push_back(row.t);
                s.y.push_back(row.motor_torques.front());
            }
            series.push_back(std::move(s));
        }
        write_file(spec.output_dir / (d.config.name + "_torque_time.svg"), [&](std::ostream& os) {
            write_svg_plot(os, d.config.name + " right-side motor torque", "time [s]",
                           "torque [N*m]", series);
        });
    }
    std::cout << table;
    return sweep.failures.empty() ? 0 : 1;
}

int run_workspace(const DeviceOptions& dev, const OutputOptions& out, double payload,
                  double forearm_mass, std::size_t res_alpha, std::size_t res_beta) {
    const auto d = resolve_device(dev);
    LoadCase load = base_load(forearm_mass);
    load.payload_mass = payload;
    const WorkspaceGrid grid = workspace_map(d.config, load, res_alpha, res_beta);
    const fs::path path =
        output_dir(out) / (d.config.name + "_workspace_" + format_load(payload) + "kg.csv");
    write_file(path, [&](std::ostream& os) { write_workspace_csv(grid, os); });
    std::cout << "wrote " << path.string() << '\n'
              << "feasible cells: " << std::fixed << std::setprecision(2)
              << 100.0 * grid.feasible_fraction() << "% of " << grid.cell_count() << '\n';
    return 0;
}

int run_torque_curve(const DeviceOptions& dev, const OutputOptions& out,
                     const std::vector<double>& loads, double forearm_mass, double alpha_min_deg,
                     double alpha_max_deg, std::size_t samples) {
    const auto d = resolve_device(dev);
    const auto alpha = linspace(deg2rad(alpha_min_deg), deg2rad(alpha_max_deg), samples);
    const auto curves = torque_vs_angle(d.config, base_load(forearm_mass), loads, alpha);
    const fs::path dir = output_dir(out);
    std::vector<PlotSeries> series;
    for (const auto& c : curves) {
        const fs::path path =
            dir / (d.config.name + "_torque_" + format_load(c.payload_kg) + "kg.csv");
        write_file(path, [&](std::ostream& os) { write_torque_curve_csv(c, os); });
        const CosineFit fit = fit_cosine(c.alpha, c.motor_torque);
        std::cout << "wrote " << path.string() << "  c=" << std::setprecision(5) << fit.amplitude
                  << " N*m  cos-fit relative residual=" << fit.relative_residual << '\n';
        PlotSeries s{format_load(c.payload_kg) + " kg", {}, c.motor_torque};
        for (double a : c.alpha) s.x.push_back(rad2deg(a));
        series.push_back(std::move(s));
    }
    if (out.svg)
        write_file(dir / (d.config.name + "_torque_angle.svg"), [&](std::ostream& os) {
            write_svg_plot(os, d.config.name + " right-side motor torque vs elbow angle",
                           "alpha [deg]", "torque [N*m]", series);
        });
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Cable-driven elbow device simulator"};
    app.name("cadel_sim");
    app.require_subcommand(1);

    auto* preset = app.add_subcommand("preset", "device presets");
    preset->require_subcommand(1);
    auto* preset_list = preset->add_subcommand("list", "list presets");
    std::string dump_dir;
    preset_list->add_option("--dump", dump_dir, "write each preset as DIR/<name>.json");

    auto* validate = app.add_subcommand("validate", "validate a device config file");
    std::string validate_path;
    validate->add_option("config", validate_path)->required();

    DeviceOptions dev;
    ExerciseOptions ex;
    OutputOptions out;
    double forearm_mass = 1.0;

    auto* ik = app.add_subcommand("ik", "cable lengths at a joint state");
    double ik_alpha = 0.0, ik_beta = 0.0;
    add_device_options(ik, dev);
    ik->add_option("--alpha", ik_alpha, "deg")->required();
    ik->add_option("--beta", ik_beta, "deg")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "simulate one exercise");
    double payload = 0.5;
    add_device_options(simulate, dev);
    add_exercise_options(simulate, ex);
    add_output_options(simulate, out);
    simulate->add_option("--load", payload, "payload, kg")->capture_default_str();
    simulate->add_option("--forearm-mass", forearm_mass, "kg")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep-loads", "simulate the exercise for several payloads");
    std::vector<double> loads = kProtocolLoads;
    add_device_options(sweep, dev);
    add_exercise_options(sweep, ex);
    add_output_options(sweep, out);
    sweep->add_option("--loads", loads, "comma-separated payloads, kg")->delimiter(',');
    sweep->add_option("--forearm-mass", forearm_mass, "kg")->capture_default_str();

    auto* workspace = app.add_subcommand("workspace", "wrench-feasible workspace map");
    std::size_t res_alpha = 61, res_beta = 51;
    double ws_payload = 0.0;
    add_device_options(workspace, dev);
    add_output_options(workspace, out);
    workspace->add_option("--load", ws_payload, "payload, kg")->capture_default_str();
    workspace->add_option("--forearm-mass", forearm_mass, "kg")->capture_default_str();
    workspace->add_option("--res-alpha", res_alpha)->capture_default_str();
    workspace->add_option("--res-beta", res_beta)->capture_default_str();

    auto* torque = app.add_subcommand("torque-curve", "quasi-static motor torque vs angle");
    double tc_min = 0.0, tc_max = 60.0;
    std::size_t tc_samples = 61;
    add_device_options(torque, dev);
    add_output_options(torque, out);
    torque->add_option("--loads", loads, "comma-separated payloads, kg")->delimiter(',');
    torque->add_option("--forearm-mass", forearm_mass, "kg")->capture_default_str();
    torque->add_option("--alpha-min", tc_min, "deg")->capture_default_str();
    torque->add_option("--alpha-max", tc_max, "deg")->capture_default_str();
    torque->add_option("--samples", tc_samples)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*preset_list) return run_preset_list(dump_dir);
        if (*validate) return run_validate(validate_path);
        if (*ik) return run_ik(dev, ik_alpha, ik_beta);
        if (*simulate) return run_simulate(dev, ex, out, payload, forearm_mass);
        if (*sweep) return run_sweep(dev, ex, out, loads, forearm_mass);
        if (*workspace)
            return run_workspace(dev, out, ws_payload, forearm_mass, res_alpha, res_beta);
        if (*torque) return run_torque_curve(dev, out, loads, forearm_mass, tc_min, tc_max,
                                             tc_samples);
    } catch (const InvalidGeometry& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "output error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace cadel
