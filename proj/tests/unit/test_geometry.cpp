#include "cadel/errors.hpp"
#include "cadel/geometry.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace cadel;

TEST_CASE("presets have the documented cable layouts") {
    const auto cadel = build_preset(Version::Cadel);
    const auto cadel3 = build_preset(Version::Cadel3);
    const auto lcadel = build_preset(Version::LCadel);
    CHECK(cadel.cable_count == 4);
    CHECK(cadel3.cable_count == 4);
    CHECK(lcadel.cable_count == 2);

    const auto guided = std::count_if(cadel3.routing.begin(), cadel3.routing.end(), [](auto& r) {
        return std::holds_alternative<ElbowGuide>(r);
    });
    CHECK(guided == 1);
    CHECK(std::holds_alternative<ElbowGuide>(cadel3.routing[0]));
    for (const auto& r : cadel.routing) CHECK(std::holds_alternative<Direct>(r));
    for (const auto& r : lcadel.routing) CHECK(std::holds_alternative<ForearmFollowing>(r));

    for (Version v : all_versions) {
        CHECK(build_preset(v) == build_preset(v));
        CHECK(config_violations(build_preset(v)).empty());
        CHECK(parse_version(version_name(v)) == v);
    }
    CHECK(parse_version("L-CADEL") == Version::LCadel);
    CHECK(parse_version("cadel.3") == Version::Cadel3);
    CHECK_THROWS_AS(parse_version("cadel4"), std::invalid_argument);
}

TEST_CASE("validation reports every violated invariant") {
    auto c = build_preset(Version::Cadel);
    c.arm_ring.radius = 0.0;
    c.forearm_ring.anchor_angles.pop_back();
    c.tension_limits.t_max = 0.5;
    const auto v = config_violations(c);
    CHECK(v.size() >= 3);
    try {
        validate_config(c);
        FAIL("expected InvalidGeometry");
    } catch (const InvalidGeometry& e) {
        CHECK(e.violations() == v);
    }

    auto d = build_preset(Version::LCadel);
    d.routing.push_back(Direct{});
    CHECK_THROWS_AS(validate_config(d), InvalidGeometry);

    auto e = build_preset(Version::Cadel);
    e.motor.efficiency = 1.5;
    CHECK_THROWS_AS(validate_config(e), InvalidGeometry);
}

TEST_CASE("frame axes") {
    for (double a : {-1.0, 0.0, 0.3, 1.0}) {
        CHECK(forearm_axis(a).norm() == doctest::Approx(1.0));
        CHECK(forearm_axis(a).dot(forearm_anterior(a)) == doctest::Approx(0.0));
        // positive alpha rotates about the flexion axis
        const Eigen::Vector3d w = flexion_axis();
        CHECK((w.cross(forearm_axis(a)) - forearm_anterior(a)).norm() == doctest::Approx(0.0));
    }
    CHECK(forearm_axis(0.0).z() == doctest::Approx(-1.0));
}

TEST_CASE("anchor positions agree with the rotation-matrix construction") {
    for (Version v : all_versions) {
        const auto c = build_preset(v);
        for (double a : {-0.9, 0.0, 0.4, 1.0})
            for (double b : {-0.8, 0.0, 0.5}) {
                const auto anchors = anchor_positions(c, {a, b});
                for (int i = 0; i < c.cable_count; ++i) {
                    const auto k = static_cast<std::size_t>(i);
                    const Eigen::Vector3d p = oracle::forearm_point(
                        c.forearm_ring.radius, c.forearm_ring.offset_from_elbow,
                        c.forearm_ring.anchor_angles[k], a, b);
                    CHECK((anchors[k].forearm - p).norm() < 1e-12);
                }
            }
    }
}

TEST_CASE("lcadel anchor geometry") {
    const auto c = build_preset(Version::LCadel);
    const auto anchors = anchor_positions(c, {0.0, 0.0});
    const double expect = std::hypot(c.forearm_ring.offset_from_elbow, c.forearm_ring.radius);
    for (const auto& a : anchors) CHECK(a.forearm.norm() == doctest::Approx(expect).epsilon(1e-12));

    // beta rotates both the forearm anchor and the following arm anchor by the same angle
    const double beta = deg2rad(30.0);
    const auto rotated = anchor_positions(c, {0.0, beta});
    const double theta = c.forearm_ring.anchor_angles[0];
    const double r = c.forearm_ring.radius;
    CHECK(rotated[0].forearm.x() == doctest::Approx(r * std::cos(theta + beta)));
    CHECK(rotated[0].forearm.y() == doctest::Approx(r * std::sin(theta + beta)));
    const double ra = c.arm_ring.radius, ta = c.arm_ring.anchor_angles[0];
    CHECK(rotated[0].arm.x() == doctest::Approx(ra * std::cos(ta + beta)));
    CHECK(rotated[0].arm.y() == doctest::Approx(ra * std::sin(ta + beta)));
}

TEST_CASE("mirror symmetry of the 4-cable layout") {
    const auto c = build_preset(Version::Cadel);
    for (double a : {-0.7, 0.0, 0.6}) {
        const auto anchors = anchor_positions(c, {a, 0.0});
        // lateral (1) and medial (3) are reflections through y = 0
        Eigen::Vector3d m = anchors[3].forearm;
        m.y() = -m.y();
        CHECK((anchors[1].forearm - m).norm() < 1e-12);
    }
}

TEST_CASE("anchor positions are continuous in the joint angles") {
    const auto c = build_preset(Version::Cadel3);
    const auto p0 = anchor_positions(c, {0.5, 0.2});
    const auto p1 = anchor_positions(c, {0.5 + 1e-7, 0.2 - 1e-7});
    for (std::size_t i = 0; i < p0.size(); ++i) {
        CHECK((p0[i].forearm - p1[i].forearm).norm() < 1e-7);
        CHECK((p0[i].arm - p1[i].arm).norm() < 1e-7);
    }
}

TEST_CASE("guide point") {
    const Eigen::Vector3d g = guide_point(ElbowGuide{0.05});
    CHECK(g.x() == doctest::Approx(0.05));
    CHECK(g.y() == 0.0);
    CHECK(g.z() == 0.0);
}
