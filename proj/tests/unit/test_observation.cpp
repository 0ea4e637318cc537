#include <cmath>

#include "doctest.h"
#include "rls/observation.hpp"

using namespace rls;

namespace {

double eta(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return a[0] * b[0] - a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

} // namespace

TEST_CASE("tetrad of a static worldline is the coordinate frame") {
    Emitter e{"E", Worldline::make_static(Event{0.0, 1.0, 2.0}), Clock{}};
    Tetrad t = tetrad_at(e, 3.0);
    CHECK((t.legs - Eigen::Matrix3d::Identity()).norm() < 1e-14);
    CHECK((t.base.coords - Eigen::Vector3d(3.0, 1.0, 2.0)).norm() < 1e-14);
}

TEST_CASE("boosted tetrads stay Minkowski-orthonormal") {
    Emitter e{"E",
              Worldline::make_inertial(Event{0.0, 0.0, 0.0, 0.0},
                                       Eigen::Vector3d(0.4, -0.2, 0.1)),
              Clock{}};
    Tetrad t = tetrad_at(e, 1.5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double expect = i != j ? 0.0 : (i == 0 ? 1.0 : -1.0);
            CHECK(std::abs(eta(t.legs.col(i), t.legs.col(j)) - expect) <
                  1e-12);
        }
}

TEST_CASE("rotating the seed rotates only the spatial legs") {
    Emitter e{"E",
              Worldline::make_inertial(Event{0.0, 0.0, 0.0},
                                       Eigen::Vector2d(0.3, 0.0)),
              Clock{}};
    double a = 0.7;
    Eigen::Matrix2d rot;
    rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    Tetrad t0 = tetrad_at(e, 0.0);
    Tetrad t1 = tetrad_at(e, 0.0, rot);
    CHECK((t0.legs.col(0) - t1.legs.col(0)).norm() < 1e-14);
    CHECK((t0.legs - t1.legs).norm() > 0.1);
}

TEST_CASE("incoming direction points toward the source") {
    Emitter e{"E", Worldline::make_static(Event{0.0, 0.0, 0.0}), Clock{}};
    Tetrad t = tetrad_at(e, 10.0); // base (10, 0, 0)
    Direction d = incoming_direction(t, Event{5.0, 3.0, 4.0});
    CHECK(d.u[0] == doctest::Approx(0.6));
    CHECK(d.u[1] == doctest::Approx(0.8));
    // two sources on the same past ray give the same direction
    Direction d2 = incoming_direction(t, Event{0.0, 6.0, 8.0});
    CHECK((d.u - d2.u).norm() < 1e-13);
    // source straight below in time has no spatial part
    CHECK_THROWS_AS(incoming_direction(t, Event{9.0, 0.0, 0.0}), DomainError);
    // spacelike-separated source is rejected
    CHECK_THROWS_AS(incoming_direction(t, Event{10.0, 3.0, 4.0}),
                    DomainError);
}

TEST_CASE("chart readings and the hemisphere atlas") {
    Direction pole;
    pole.u = Eigen::Vector3d(1.0, 0.0, 0.0);
    CHECK(chart_reading(pole).tag == Hemisphere::polar_circle);

    Direction north;
    north.u = Eigen::Vector3d(0.0, 0.0, 1.0);
    HemisphereReading rn = chart_reading(north);
    CHECK(rn.tag == Hemisphere::north);
    CHECK(rn.chart[0] == doctest::Approx(0.0));
    CHECK(rn.chart[1] == doctest::Approx(0.0));

    Direction diag;
    diag.u = Eigen::Vector3d(1.0, 1.0, 1.0).normalized();
    HemisphereReading rd = chart_reading(diag);
    CHECK(rd.tag == Hemisphere::north);
    CHECK(rd.chart[0] == doctest::Approx(1.0));
    CHECK(rd.chart[1] == doctest::Approx(1.0));

    Direction south;
    south.u = Eigen::Vector3d(0.5, 0.5, -std::sqrt(0.5));
    CHECK(chart_reading(south).tag == Hemisphere::south);

    Direction circle2;
    circle2.u = Eigen::Vector2d(0.6, 0.8);
    HemisphereReading rc = chart_reading(circle2);
    CHECK(rc.tag == Hemisphere::north);
    CHECK(rc.chart[0] == doctest::Approx(0.8 / 0.6));
}

TEST_CASE("passage signature counts alternating polar crossings") {
    std::vector<Direction> traj;
    // a bright point swinging across the polar circle twice
    for (double a = 0.3; a > -0.3; a -= 0.05) {
        Direction d;
        d.u = Eigen::Vector3d(std::cos(a), 0.0, std::sin(a));
        traj.push_back(d);
    }
    for (double a = -0.3; a < 0.3; a += 0.05) {
        Direction d;
        d.u = Eigen::Vector3d(std::cos(a), 0.0, std::sin(a));
        traj.push_back(d);
    }
    // one north->south and one south->north passage cancel
    CHECK(passage_signature(traj) == 0);
    traj.resize(traj.size() / 2);
    CHECK(passage_signature(traj) == 1);
}

TEST_CASE("projective normalization against reference bright points") {
    auto dir2 = [](double a) {
        Direction d;
        d.u = Eigen::Vector2d(std::cos(a), std::sin(a));
        return d;
    };
    std::array<Direction, 3> refs{dir2(0.3), dir2(1.4), dir2(-0.8)};
    CHECK(projective::proj_distance(normalize_reading_rp1(refs[0], refs),
                                    {0.0, 1.0}) < 1e-12);
    CHECK(projective::proj_distance(normalize_reading_rp1(refs[1], refs),
                                    {1.0, 0.0}) < 1e-12);
    CHECK(projective::proj_distance(normalize_reading_rp1(refs[2], refs),
                                    {1.0, 1.0}) < 1e-12);
    // degenerate frame: two references on the same projective point
    std::array<Direction, 3> bad{dir2(0.3), dir2(0.3 + 3.14159265358979),
                                 dir2(-0.8)};
    CHECK_THROWS_AS(normalize_reading_rp1(bad[0], bad), SingularError);
}

TEST_CASE("RP2 normalization sends references to the canonical frame") {
    auto dir3 = [](double x, double y, double z) {
        Direction d;
        d.u = Eigen::Vector3d(x, y, z).normalized();
        return d;
    };
    std::array<Direction, 4> refs{dir3(1, 0.1, -0.2), dir3(-0.3, 1, 0.2),
                                  dir3(0.2, -0.4, 1), dir3(0.7, 0.6, 0.5)};
    std::array<Eigen::Vector3d, 4> canon{
        Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0),
        Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(1, 1, 1)};
    for (int i = 0; i < 4; ++i) {
        projective::ProjPoint2 p =
            normalize_reading_rp2(refs[(size_t)i], refs);
        CHECK(projective::proj_distance(
                  p, projective::ProjPoint2(canon[(size_t)i])) < 1e-12);
    }
    std::array<Direction, 4> bad{dir3(1, 0, 0), dir3(1, 0.5, 0),
                                 dir3(1, -0.5, 0), dir3(0.7, 0.6, 0.5)};
    CHECK_THROWS_AS(normalize_reading_rp2(bad[0], bad), SingularError);
}
