#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's kinematics or statics code.

#include "cadel/geometry.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

namespace cadel::oracle {

// Forearm ring point: rotate the local point about z by beta, then about -y by alpha.
inline Eigen::Vector3d forearm_point(double radius, double offset, double angle, double alpha,
                                     double beta) {
    const Eigen::Vector3d local(radius * std::cos(angle), radius * std::sin(angle), -offset);
    const Eigen::Matrix3d rz = Eigen::AngleAxisd(beta, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    const Eigen::Matrix3d rf =
        Eigen::AngleAxisd(alpha, -Eigen::Vector3d::UnitY()).toRotationMatrix();
    return rf * rz * local;
}

inline Eigen::Vector3d arm_point(double radius, double offset, double angle) {
    return {radius * std::cos(angle), radius * std::sin(angle), offset};
}

inline std::vector<double> cable_lengths(const DeviceConfig& c, double alpha, double beta) {
    std::vector<double> out;
    for (int i = 0; i < c.cable_count; ++i) {
        const auto& r = c.routing[static_cast<std::size_t>(i)];
        const double ta = c.arm_ring.anchor_angles[static_cast<std::size_t>(i)] +
                          (std::holds_alternative<ForearmFollowing>(r) ? beta : 0.0);
        const Eigen::Vector3d q = arm_point(c.arm_ring.radius, c.arm_ring.offset_from_elbow, ta);
        const Eigen::Vector3d p =
            forearm_point(c.forearm_ring.radius, c.forearm_ring.offset_from_elbow,
                          c.forearm_ring.anchor_angles[static_cast<std::size_t>(i)], alpha, beta);
        if (const auto* g = std::get_if<ElbowGuide>(&r)) {
            const Eigen::Vector3d gp(g->guide_point_offset, 0.0, 0.0);
            out.push_back((q - gp).norm() + (gp - p).norm());
        } else {
            out.push_back((q - p).norm());
        }
    }
    return out;
}

// Central differences of the length map, column 0 = d/dalpha, column 1 = d/dbeta.
inline Eigen::MatrixX2d length_jacobian(const DeviceConfig& c, double alpha, double beta,
                                        double h = 1e-6) {
    Eigen::MatrixX2d j(c.cable_count, 2);
    const auto ap = cable_lengths(c, alpha + h, beta), am = cable_lengths(c, alpha - h, beta);
    const auto bp = cable_lengths(c, alpha, beta + h), bm = cable_lengths(c, alpha, beta - h);
    for (int i = 0; i < c.cable_count; ++i) {
        j(i, 0) = (ap[i] - am[i]) / (2 * h);
        j(i, 1) = (bp[i] - bm[i]) / (2 * h);
    }
    return j;
}

// Exhaustive active-set enumeration for min |u|^2 s.t. A u = d, 0 <= u <= ub.
// Each cable is at its lower bound, its upper bound, or free; the free part is
// the minimum-norm solution of the reduced system. The best box-feasible,
// wrench-exact candidate is the global optimum of the strictly convex problem.
inline std::optional<Eigen::VectorXd> enumerate_box_qp(const Eigen::Matrix2Xd& A,
                                                       const Eigen::VectorXd& ub,
                                                       const Eigen::Vector2d& d,
                                                       double tol = 1e-10) {
    const int n = static_cast<int>(A.cols());
    int combos = 1;
    for (int i = 0; i < n; ++i) combos *= 3;
    std::optional<Eigen::VectorXd> best;
    double best_norm = std::numeric_limits<double>::infinity();
    for (int code = 0; code < combos; ++code) {
        Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
        std::vector<int> free;
        int c = code;
        for (int i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) u(i) = ub(i);
            if (c % 3 == 2) free.push_back(i);
        }
        Eigen::Vector2d rhs = d - A * u;
        if (!free.empty()) {
            Eigen::Matrix2Xd af(2, static_cast<Eigen::Index>(free.size()));
            for (std::size_t k = 0; k < free.size(); ++k) af.col(static_cast<Eigen::Index>(k)) = A.col(free[k]);
            const Eigen::VectorXd uf = af.completeOrthogonalDecomposition().solve(rhs);
            for (std::size_t k = 0; k < free.size(); ++k) u(free[k]) = uf(static_cast<Eigen::Index>(k));
        }
        if ((A * u - d).cwiseAbs().maxCoeff() > tol) continue;
        if ((u.array() < -tol).any() || ((u - ub).array() > tol).any()) continue;
        if (u.squaredNorm() < best_norm) {
            best_norm = u.squaredNorm();
            best = u;
        }
    }
    return best;
}

// Free-pendulum small-oscillation period about the hanging equilibrium.
inline double pendulum_period(double inertia, double mass_moment, double g) {
    return 2.0 * std::numbers::pi * std::sqrt(inertia / (mass_moment * g));
}

}  // namespace cadel::oracle
