#include "cadel/statics.hpp"

#include "cadel/errors.hpp"
#include "cadel/kinematics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cadel {

namespace {

constexpr double kWrenchTolerance = 1e-9;  // N*m

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() * b.y() - a.y() * b.x();
}

double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                        const Eigen::Vector2d& b) {
    const Eigen::Vector2d ab = b - a;
    const double len2 = ab.squaredNorm();
    const double s = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return (a + s * ab - p).norm();
}

// Vertices (counter-clockwise) of the 2D zonotope {A u : 0 <= u <= u_max}.
std::vector<Eigen::Vector2d> zonotope_vertices(const Eigen::Matrix2Xd& A,
                                               const Eigen::VectorXd& u_max) {
    Eigen::Vector2d center = Eigen::Vector2d::Zero();
    std::vector<Eigen::Vector2d> half;
    for (Eigen::Index i = 0; i < A.cols(); ++i) {
        Eigen::Vector2d h = 0.5 * u_max(i) * A.col(i);
        center += h;
        if (h.norm() < 1e-15) continue;
        if (h.y() < 0.0 || (h.y() == 0.0 && h.x() < 0.0)) h = -h;
        half.push_back(h);
    }
    std::sort(half.begin(), half.end(), [](const auto& a, const auto& b) {
        return std::atan2(a.y(), a.x()) < std::atan2(b.y(), b.x());
    });
    Eigen::Vector2d v = center;
    for (const auto& h : half) v -= h;
    std::vector<Eigen::Vector2d> verts;
    verts.reserve(2 * half.size() + 1);
    if (half.empty()) {
        verts.push_back(center);
        return verts;
    }
    for (const auto& h : half) {
        verts.push_back(v);
        v += 2.0 * h;
    }
    for (const auto& h : half) {
        verts.push_back(v);
        v -= 2.0 * h;
    }
    return verts;
}

// Conjugate of 0.5*u^2 restricted to [0, ub], evaluated at s.
double box_conjugate(double s, double ub) {
    if (s <= 0.0) return 0.0;
    if (s >= ub) return s * ub - 0.5 * ub * ub;
    return 0.5 * s * s;
}

// Dual active-set Newton iteration for
//   min 0.5*|u|^2  s.t.  A u = d,  0 <= u <= ub.
// The optimum is u = clamp(A^T lambda); each step solves the reduced system on
// the cables currently strictly inside their box.
Eigen::VectorXd solve_box_qp(const Eigen::Matrix2Xd& A, const Eigen::VectorXd& ub,
                             const Wrench& d) {
    const Eigen::Index n = A.cols();
    auto primal = [&](const Eigen::Vector2d& lambda) {
        Eigen::VectorXd s = A.transpose() * lambda;
        return Eigen::VectorXd(s.cwiseMax(Eigen::VectorXd::Zero(n)).cwiseMin(ub));
    };
    auto dual = [&](const Eigen::Vector2d& lambda) {
        const Eigen::VectorXd s = A.transpose() * lambda;
        double v = lambda.dot(d);
        for (Eigen::Index i = 0; i < n; ++i) v -= box_conjugate(s(i), ub(i));
        return v;
    };

    const Eigen::Matrix2d aat = A * A.transpose();
    Eigen::Vector2d lambda = aat.completeOrthogonalDecomposition().solve(d);
    const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());

    for (int it = 0; it < 100; ++it) {
        const Eigen::VectorXd s = A.transpose() * lambda;
        const Eigen::VectorXd u = s.cwiseMax(Eigen::VectorXd::Zero(n)).cwiseMin(ub);
        const Eigen::Vector2d g = d - A * u;
        if (g.cwiseAbs().maxCoeff() <= 1e-14 * scale) break;

        Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
        for (Eigen::Index i = 0; i < n; ++i)
            if (s(i) > 0.0 && s(i) < ub(i)) h += A.col(i) * A.col(i).transpose();
        h += 1e-12 * (1.0 + aat.trace()) * Eigen::Matrix2d::Identity();
        const Eigen::Vector2d step = h.ldlt().solve(g);

        // Near the optimum the dual gain drops below the rounding level of the dual value
        // itself, so the Armijo test gets a slack of a few ulps.
        const double d0 = dual(lambda);
        const double slope = g.dot(step);
        const double slack = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(d0));
        double t = 1.0;
        int k = 0;
        for (; k < 60 && dual(lambda + t * step) < d0 + 1e-4 * t * slope - slack; ++k) t *= 0.5;
        if (k == 60) break;
        lambda += t * step;
    }
    return primal(lambda);
}

}  // namespace

LoadCase bench_load(double payload_kg) {
    LoadCase load;
    load.payload_mass = payload_kg;
    return load;
}

void validate_load(const LoadCase& l) {
    if (!(l.forearm_mass >= 0.0 && l.payload_mass >= 0.0))
        throw std::invalid_argument("load masses must be >= 0");
    if (!(l.forearm_com_distance > 0.0 && l.payload_distance > 0.0 && l.forearm_length > 0.0))
        throw std::invalid_argument("load distances must be > 0");
    if (!(l.gravity > 0.0)) throw std::invalid_argument("gravity must be > 0");
}

double gravity_torque(const LoadCase& load, double alpha) {
    return (load.forearm_mass * load.forearm_com_distance +
            load.payload_mass * load.payload_distance) *
           load.gravity * std::cos(alpha);
}

Eigen::Matrix2Xd structure_rows(const DeviceConfig& config, const JointState& joint) {
    const auto anchors = anchor_positions(config, joint);
    const CableLengths ik = inverse_kinematics(config, joint);
    const Eigen::Vector3d flex = flexion_axis();
    const Eigen::Vector3d lateral = forearm_anterior(joint.alpha);
    Eigen::Matrix2Xd A(2, config.cable_count);
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const Eigen::Vector3d moment = anchors[i].forearm.cross(ik.directions[i]);
        A(0, static_cast<Eigen::Index>(i)) = moment.dot(flex);
        A(1, static_cast<Eigen::Index>(i)) = moment.dot(lateral);
    }
    return A;
}

Wrench delivered_wrench(const DeviceConfig& config, const Eigen::Matrix2Xd& structure,
                        const std::vector<double>& tensions) {
    Eigen::VectorXd u(static_cast<Eigen::Index>(tensions.size()));
    for (std::size_t i = 0; i < tensions.size(); ++i)
        u(static_cast<Eigen::Index>(i)) = tensions[i] - config.tension_limits.t_min;
    return structure * u;
}

double wrench_set_distance(const Eigen::Matrix2Xd& A, const Eigen::VectorXd& u_max,
                           const Wrench& d) {
    const auto verts = zonotope_vertices(A, u_max);
    if (verts.size() == 1) return (d - verts.front()).norm();

    double area2 = 0.0;
    bool inside = true;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const auto& a = verts[k];
        const auto& b = verts[(k + 1) % verts.size()];
        area2 += cross2(a, b);
        if (cross2(b - a, d - a) < 0.0) inside = false;
    }
    if (inside && area2 > 1e-24) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < verts.size(); ++k)
        best = std::min(best, segment_distance(d, verts[k], verts[(k + 1) % verts.size()]));
    return best;
}

CableSolution tension_distribution(const DeviceConfig& config, const JointState& joint,
                                   const Wrench& demand) {
    return tension_distribution(config, structure_rows(config, joint), demand);
}

CableSolution tension_distribution(const DeviceConfig& config, const Eigen::Matrix2Xd& A,
                                   const Wrench& demand) {
    if (!demand.allFinite()) throw std::invalid_argument("demand must be finite");
    const Eigen::Index n = A.cols();
    const double t_min = config.tension_limits.t_min;
    const Eigen::VectorXd ub =
        Eigen::VectorXd::Constant(n, std::max(0.0, config.tension_limits.t_max - t_min));

    Eigen::VectorXd u;
    const Eigen::Matrix2d square = n == 2 ? Eigen::Matrix2d(A.leftCols<2>()) : Eigen::Matrix2d();
    if (n == 2 && std::abs(square.determinant()) > 1e-12 * square.squaredNorm()) {
        // Two cables, two equations: the tension vector is unique.
        u = square.partialPivLu().solve(demand);
        const bool in_box = (u.array() >= -kWrenchTolerance).all() &&
                            (u.array() <= ub.array() + kWrenchTolerance).all();
        if (!in_box) throw Infeasible(wrench_set_distance(A, ub, demand));
        u = u.cwiseMax(Eigen::VectorXd::Zero(n)).cwiseMin(ub);
    } else {
        const double dist = wrench_set_distance(A, ub, demand);
        if (dist > kWrenchTolerance) throw Infeasible(dist);
        u = solve_box_qp(A, ub, demand);
    }

    const Wrench residual = A * u - demand;
    if (residual.cwiseAbs().maxCoeff() > kWrenchTolerance)
        throw Infeasible(wrench_set_distance(A, ub, demand));

    CableSolution out;
    out.residual_wrench = residual;
    const double gain = config.motor.pulley_radius / config.motor.efficiency;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = t_min + u(i);
        out.tensions.push_back(t);
        out.motor_torques.push_back(t * gain);
    }
    return out;
}

bool wrench_feasible(const DeviceConfig& config, const JointState& joint, const LoadCase& load) {
    try {
        tension_distribution(config, joint, Wrench(gravity_torque(load, joint.alpha), 0.0));
        return true;
    } catch (const Infeasible&) {
        return false;
    } catch (const DegenerateGeometry&) {
        return false;
    }
}

}  // namespace cadel
