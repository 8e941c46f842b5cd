#include "cadel/workspace.hpp"

#include "cadel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cadel {

double WorkspaceGrid::feasible_fraction() const {
    if (feasible.empty()) return 0.0;
    const auto count = std::count(feasible.begin(), feasible.end(), std::uint8_t{1});
    return static_cast<double>(count) / static_cast<double>(feasible.size());
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw std::invalid_argument("linspace needs at least 2 samples");
    std::vector<double> out(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) out[k] = lo + step * static_cast<double>(k);
    out.back() = hi;
    return out;
}

WorkspaceGrid workspace_map(const DeviceConfig& config, const LoadCase& load,
                            std::size_t alpha_samples, std::size_t beta_samples,
                            const RangeOfMotion& rom) {
    if (alpha_samples < 2 || beta_samples < 2)
        throw std::invalid_argument("workspace resolution must be >= 2 per axis");
    validate_load(load);

    WorkspaceGrid grid;
    grid.alpha = linspace(rom.alpha_min, rom.alpha_max, alpha_samples);
    grid.beta = linspace(rom.beta_min, rom.beta_max, beta_samples);
    grid.feasible.assign(alpha_samples * beta_samples, 0);
    grid.total_tension.assign(alpha_samples * beta_samples,
                              std::numeric_limits<double>::quiet_NaN());

    auto eval_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < beta_samples; ++j) {
            const JointState joint{grid.alpha[i], grid.beta[j], 0.0, 0.0};
            const std::size_t c = grid.index(i, j);
            try {
                const auto sol = tension_distribution(
                    config, joint, Wrench(gravity_torque(load, joint.alpha), 0.0));
                grid.feasible[c] = 1;
                grid.total_tension[c] =
                    std::accumulate(sol.tensions.begin(), sol.tensions.end(), 0.0);
            } catch (const Infeasible&) {
            } catch (const DegenerateGeometry&) {
            }
        }
    };

    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, alpha_samples);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < alpha_samples; i += workers) eval_row(i);
        });
    for (auto& t : pool) t.join();
    return grid;
}

std::vector<TorqueCurve> torque_vs_angle(const DeviceConfig& config, const LoadCase& base,
                                         const std::vector<double>& payloads_kg,
                                         const std::vector<double>& alpha) {
    if (payloads_kg.empty()) throw std::invalid_argument("load list must be nonempty");
    std::vector<TorqueCurve> curves;
    curves.reserve(payloads_kg.size());
    for (double payload : payloads_kg) {
        LoadCase load = base;
        load.payload_mass = payload;
        validate_load(load);
        TorqueCurve curve{payload, alpha, {}};
        curve.motor_torque.reserve(alpha.size());
        for (double a : alpha) {
            try {
                const auto sol = tension_distribution(config, JointState{a, 0.0, 0.0, 0.0},
                                                      Wrench(gravity_torque(load, a), 0.0));
                curve.motor_torque.push_back(sol.motor_torques.front());
            } catch (const Infeasible&) {
                curve.motor_torque.push_back(std::numeric_limits<double>::quiet_NaN());
            }
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

CosineFit fit_cosine(const std::vector<double>& alpha, const std::vector<double>& y) {
    if (alpha.size() != y.size()) throw std::invalid_argument("fit_cosine: size mismatch");
    double cy = 0.0, cc = 0.0, yy = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (std::isnan(y[k])) continue;
        const double c = std::cos(alpha[k]);
        cy += c * y[k];
        cc += c * c;
        yy += y[k] * y[k];
    }
    if (cc == 0.0 || yy == 0.0) return {0.0, yy == 0.0 ? 0.0 : 1.0};
    const double amp = cy / cc;
    double rr = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (std::isnan(y[k])) continue;
        const double e = y[k] - amp * std::cos(alpha[k]);
        rr += e * e;
    }
    return {amp, std::sqrt(rr / yy)};
}

}  // namespace cadel
