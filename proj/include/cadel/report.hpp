#pragma once

// Text outputs: exercise/workspace/torque CSVs and a minimal SVG line plot.

#include "cadel/simulation.hpp"
#include "cadel/workspace.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace cadel {

/// t_s,alpha_des_deg,alpha_deg,beta_deg,l0_m..,T0_N..,tau0_Nm..,P_W
std::string exercise_csv_header(int cable_count);
void write_exercise_csv(const ExerciseRecord& record, std::ostream& out);

/// alpha_deg,beta_deg,feasible,total_tension_N (one row per cell, alpha-major).
void write_workspace_csv(const WorkspaceGrid& grid, std::ostream& out);

/// alpha_deg,motor_torque_Nm; infeasible samples are written as empty fields.
void write_torque_curve_csv(const TorqueCurve& curve, std::ostream& out);

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;  // NaN breaks the line
};

/// Self-contained SVG with one polyline path per series.
void write_svg_plot(std::ostream& out, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<PlotSeries>& series);

}  // namespace cadel
