#include "cadel/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace cadel {

std::string exercise_csv_header(int cable_count) {
    std::ostringstream os;
    os << "t_s,alpha_des_deg,alpha_deg,beta_deg";
    for (const char* col : {"l%_m", "T%_N", "tau%_Nm"}) {
        const std::string pattern(col);
        const auto pos = pattern.find('%');
        for (int i = 0; i < cable_count; ++i)
            os << ',' << pattern.substr(0, pos) << i << pattern.substr(pos + 1);
    }
    os << ",P_W";
    return os.str();
}

void write_exercise_csv(const ExerciseRecord& record, std::ostream& out) {
    out << exercise_csv_header(record.cable_count) << '\n';
    out << std::setprecision(10);
    for (const auto& s : record.samples) {
        out << s.t << ',' << rad2deg(s.alpha_desired) << ',' << rad2deg(s.alpha) << ','
            << rad2deg(s.beta);
        for (double v : s.lengths) out << ',' << v;
        for (double v : s.tensions) out << ',' << v;
        for (double v : s.motor_torques) out << ',' << v;
        out << ',' << s.power << '\n';
    }
}

void write_workspace_csv(const WorkspaceGrid& grid, std::ostream& out) {
    out << "alpha_deg,beta_deg,feasible,total_tension_N\n" << std::setprecision(10);
    for (std::size_t i = 0; i < grid.alpha.size(); ++i)
        for (std::size_t j = 0; j < grid.beta.size(); ++j) {
            const std::size_t c = grid.index(i, j);
            out << rad2deg(grid.alpha[i]) << ',' << rad2deg(grid.beta[j]) << ','
                << int(grid.feasible[c]) << ',';
            if (grid.feasible[c]) out << grid.total_tension[c];
            out << '\n';
        }
}

void write_torque_curve_csv(const TorqueCurve& curve, std::ostream& out) {
    out << "alpha_deg,motor_torque_Nm\n" << std::setprecision(10);
    for (std::size_t k = 0; k < curve.alpha.size(); ++k) {
        out << rad2deg(curve.alpha[k]) << ',';
        if (!std::isnan(curve.motor_torque[k])) out << curve.motor_torque[k];
        out << '\n';
    }
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_svg_plot(std::ostream& out, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<PlotSeries>& series) {
    constexpr double width = 640, height = 420, left = 70, right = 150, top = 40, bottom = 50;
    constexpr std::array<const char*, 6> colors{"#1f77b4", "#d62728", "#2ca02c",
                                                "#ff7f0e", "#9467bd", "#8c564b"};
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (std::isnan(s.y[k])) continue;
            xmin = std::min(xmin, s.x[k]);
            xmax = std::max(xmax, s.x[k]);
            ymin = std::min(ymin, s.y[k]);
            ymax = std::max(ymax, s.y[k]);
        }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double pw = width - left - right, ph = height - top - bottom;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    out << std::setprecision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\">" << escape(title)
        << "</text>\n";
    out << "<path d=\"M" << left << ' ' << top << " V" << top + ph << " H" << left + pw
        << "\" stroke=\"black\" fill=\"none\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = xmin + (xmax - xmin) * k / 4.0, yv = ymin + (ymax - ymin) * k / 4.0;
        out << "<text x=\"" << px(xv) << "\" y=\"" << top + ph + 16
            << "\" text-anchor=\"middle\">" << xv << "</text>\n";
        out << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4
            << "\" text-anchor=\"end\">" << yv << "</text>\n";
    }
    out << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
    out << "<text transform=\"translate(16 " << top + ph / 2
        << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label) << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = colors[s % colors.size()];
        std::ostringstream d;
        d << std::setprecision(6);
        bool pen_down = false;
        for (std::size_t k = 0; k < series[s].x.size(); ++k) {
            if (std::isnan(series[s].y[k])) {
                pen_down = false;
                continue;
            }
            d << (pen_down ? " L" : " M") << px(series[s].x[k]) << ' ' << py(series[s].y[k]);
            pen_down = true;
        }
        out << "<path d=\"" << d.str() << "\" stroke=\"" << color
            << "\" fill=\"none\" stroke-width=\"1.5\"/>\n";
        const double ly = top + 10 + 18.0 * static_cast<double>(s);
        out << "<path d=\"M" << left + pw + 10 << ' ' << ly << " h20\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + pw + 36 << "\" y=\"" << ly + 4 << "\">"
            << escape(series[s].label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace cadel
