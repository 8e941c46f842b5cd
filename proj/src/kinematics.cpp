#include "cadel/kinematics.hpp"

#include "cadel/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <variant>

namespace cadel {

namespace {

// Point the forearm-side segment of cable i runs toward.
Eigen::Vector3d segment_target(const Routing& routing, const AnchorPair& anchors) {
    if (const auto* g = std::get_if<ElbowGuide>(&routing)) return guide_point(*g);
    return anchors.arm;
}

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

CableLengths inverse_kinematics(const DeviceConfig& config, const JointState& joint) {
    const auto anchors = anchor_positions(config, joint);
    CableLengths out;
    out.lengths.reserve(anchors.size());
    out.directions.reserve(anchors.size());
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const Eigen::Vector3d target = segment_target(config.routing[i], anchors[i]);
        const Eigen::Vector3d seg = target - anchors[i].forearm;
        const double last = seg.norm();
        double length = last;
        if (std::holds_alternative<ElbowGuide>(config.routing[i])) {
            const double first = (anchors[i].arm - target).norm();
            if (first < kMinCableLength) throw DegenerateGeometry(i, first);
            length += first;
        }
        if (last < kMinCableLength) throw DegenerateGeometry(i, last);
        out.lengths.push_back(length);
        out.directions.push_back(seg / last);
    }
    return out;
}

Eigen::MatrixX2d cable_jacobian(const DeviceConfig& config, const JointState& joint) {
    const CableLengths ik = inverse_kinematics(config, joint);
    const Eigen::Vector3d f = forearm_axis(joint.alpha);
    const Eigen::Vector3d a = forearm_anterior(joint.alpha);
    const Eigen::Vector3d y = lateral_axis();
    const double rf = config.forearm_ring.radius;
    const double df = config.forearm_ring.offset_from_elbow;
    const double ra = config.arm_ring.radius;

    const auto n = static_cast<Eigen::Index>(config.cable_count);
    Eigen::MatrixX2d jac(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double phi = config.forearm_ring.anchor_angles[k] + joint.beta;
        // Forearm anchor p = df*f + rf*(cos(phi)*a + sin(phi)*y), with f' = a, a' = -f.
        const Eigen::Vector3d dp_dalpha = df * a - rf * std::cos(phi) * f;
        const Eigen::Vector3d dp_dbeta = rf * (-std::sin(phi) * a + std::cos(phi) * y);
        Eigen::Vector3d dq_dbeta = Eigen::Vector3d::Zero();
        if (std::holds_alternative<ForearmFollowing>(config.routing[k])) {
            const double psi = config.arm_ring.anchor_angles[k] + joint.beta;
            dq_dbeta = {-ra * std::sin(psi), ra * std::cos(psi), 0.0};
        }
        const Eigen::Vector3d& d = ik.directions[k];
        jac(i, 0) = -d.dot(dp_dalpha);
        jac(i, 1) = d.dot(dq_dbeta - dp_dbeta);
    }
    return jac;
}

JointState forward_kinematics(const DeviceConfig& config, const std::vector<double>& lengths,
                              const JointState& guess, const FkOptions& options) {
    const auto n = static_cast<Eigen::Index>(config.cable_count);
    const Eigen::Map<const Eigen::VectorXd> target(lengths.data(),
                                                   static_cast<Eigen::Index>(lengths.size()));
    if (target.size() != n) throw std::invalid_argument("length count != cable_count");

    JointState x{guess.alpha, guess.beta, 0.0, 0.0};
    auto residual_at = [&](const JointState& s) {
        const auto ik = inverse_kinematics(config, s);
        return Eigen::VectorXd(
            Eigen::Map<const Eigen::VectorXd>(ik.lengths.data(), n) - target);
    };

    Eigen::VectorXd r = residual_at(x);
    int it = 0;
    for (; it < options.max_iterations; ++it) {
        if (max_abs(r) < options.tolerance) return x;
        const Eigen::MatrixX2d jac = cable_jacobian(config, x);
        Eigen::Matrix2d normal = jac.transpose() * jac;
        const Eigen::Vector2d grad = jac.transpose() * r;

        // Guard against a weakly observable beta (e.g. coaxial rings at alpha = 0).
        Eigen::JacobiSVD<Eigen::Matrix2d> svd(normal);
        const double smax = svd.singularValues()(0);
        const double smin = svd.singularValues()(1);
        if (smin <= 0.0 || smax / smin > 1e12) normal += 1e-9 * Eigen::Matrix2d::Identity();
        const Eigen::Vector2d step = -normal.ldlt().solve(grad);

        // Backtrack until the squared residual decreases.
        const double r2 = r.squaredNorm();
        double scale = 1.0;
        JointState trial = x;
        Eigen::VectorXd r_trial;
        bool improved = false;
        for (int k = 0; k < 30; ++k, scale *= 0.5) {
            trial.alpha = x.alpha + scale * step(0);
            trial.beta = x.beta + scale * step(1);
            try {
                r_trial = residual_at(trial);
            } catch (const DegenerateGeometry&) {
                continue;
            }
            if (r_trial.squaredNorm() < r2) {
                improved = true;
                break;
            }
        }
        if (!improved) break;
        x = trial;
        r = r_trial;
    }
    if (max_abs(r) < options.tolerance) return x;
    throw NoConvergence(it, max_abs(r));
}

RomCheck check_rom(const JointState& joint, const RangeOfMotion& rom) {
    RomCheck out;
    if (!(joint.alpha >= rom.alpha_min && joint.alpha <= rom.alpha_max))
        out.violations.push_back({"alpha", joint.alpha, rom.alpha_min, rom.alpha_max});
    if (!(joint.beta >= rom.beta_min && joint.beta <= rom.beta_max))
        out.violations.push_back({"beta", joint.beta, rom.beta_min, rom.beta_max});
    return out;
}

}  // namespace cadel
