#pragma once

#include "cadel/geometry.hpp"
#include "cadel/statics.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cadel {

/// Feasibility over a uniform alpha x beta grid. Cells are stored alpha-major:
/// cell(i, j) = i * beta.size() + j.
struct WorkspaceGrid {
    std::vector<double> alpha;  // rad
    std::vector<double> beta;   // rad
    std::vector<std::uint8_t> feasible;
    std::vector<double> total_tension;  // N, NaN where infeasible

    std::size_t index(std::size_t i, std::size_t j) const { return i * beta.size() + j; }
    std::size_t cell_count() const { return feasible.size(); }
    double feasible_fraction() const;
};

/// Uniform samples including both ends.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Evaluates the gravity-demand feasibility at every cell. Rows are split
/// across threads; output order does not depend on scheduling.
WorkspaceGrid workspace_map(const DeviceConfig& config, const LoadCase& load,
                            std::size_t alpha_samples = 61, std::size_t beta_samples = 51,
                            const RangeOfMotion& rom = human_rom());

struct TorqueCurve {
    double payload_kg;
    std::vector<double> alpha;         // rad
    std::vector<double> motor_torque;  // N*m of cable 0; NaN marks an infeasible gap
};

/// Quasi-static right-side motor torque vs alpha (beta = 0) for each payload,
/// with base supplying the forearm parameters.
std::vector<TorqueCurve> torque_vs_angle(const DeviceConfig& config, const LoadCase& base,
                                         const std::vector<double>& payloads_kg,
                                         const std::vector<double>& alpha);

struct CosineFit {
    double amplitude;          // c in c*cos(alpha)
    double relative_residual;  // |y - c cos(alpha)|_2 / |y|_2
};

/// Least-squares fit of y = c*cos(alpha); NaN samples are skipped.
CosineFit fit_cosine(const std::vector<double>& alpha, const std::vector<double>& y);

}  // namespace cadel
