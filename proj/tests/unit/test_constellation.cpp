#include <cmath>

#include "doctest.h"
#include "rls/constellation.hpp"

using namespace rls;

TEST_CASE("worldline evaluation") {
    Worldline w = Worldline::make_inertial(Event{0.0, 0.0, 0.0},
                                           Eigen::Vector2d(0.0, 0.0));
    CHECK((w.eval(5.0).coords - Eigen::Vector3d(5.0, 0.0, 0.0)).norm() == 0.0);

    Worldline c = Worldline::make_circular(3, 0.0, Eigen::Vector2d(1.0, 2.0),
                                           1.0, 0.3);
    CHECK((c.eval(0.0).coords - Eigen::Vector3d(0.0, 2.0, 2.0)).norm() <
          1e-15);

    Worldline h = Worldline::make_helical(0.0, Eigen::Vector3d(0.0, 0.0, 0.0),
                                          2.0, 0.2, 0.1);
    // hand-evaluated parametric point at s = 2
    Eigen::Vector4d expect(2.0, 2.0 * std::cos(0.4), 2.0 * std::sin(0.4),
                           0.2);
    CHECK((h.eval(2.0).coords - expect).norm() < 1e-15);
}

TEST_CASE("worldline validation rejects superluminal motion") {
    CHECK_THROWS_AS(Worldline::make_inertial(Event{0.0, 0.0, 0.0},
                                             Eigen::Vector2d(0.8, 0.8)),
                    ConfigError);
    CHECK_THROWS_AS(Worldline::make_circular(3, 0.0,
                                             Eigen::Vector2d(0.0, 0.0), 2.0,
                                             0.6),
                    ConfigError);
}

TEST_CASE("domain limits are enforced") {
    Worldline w = Worldline::make_static(Event{0.0, 1.0, 1.0});
    w.s_min = -1.0;
    w.s_max = 1.0;
    CHECK_THROWS_AS(w.eval(2.0), DomainError);
}

TEST_CASE("clock stamps and inverses") {
    Emitter e{"E", Worldline::make_static(Event{0.0, 0.0, 0.0}), Clock{}};
    CHECK(e.stamp(3.0) == doctest::Approx(3.0)); // proper time, static

    Clock affine;
    affine.kind = Clock::Kind::affine;
    affine.rate = 2.0;
    affine.offset = 1.0;
    Emitter ea{"A", e.worldline, affine};
    CHECK(ea.stamp(3.0) == doctest::Approx(7.0));
    CHECK(ea.unstamp(7.0) == doctest::Approx(3.0));

    Clock mono;
    mono.kind = Clock::Kind::monotone;
    mono.amp = 0.1;
    mono.freq = 1.0;
    Emitter em{"M", e.worldline, mono};
    CHECK(em.unstamp(em.stamp(3.0)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("proper-time rate enters the stamps of moving emitters") {
    Worldline w = Worldline::make_inertial(Event{0.0, 0.0, 0.0},
                                           Eigen::Vector2d(0.6, 0.0));
    Emitter e{"E", w, Clock{}};
    CHECK(e.stamp(10.0) == doctest::Approx(8.0)); // sqrt(1 - 0.36) * 10
    CHECK(e.unstamp(8.0) == doctest::Approx(10.0));
}

TEST_CASE("clock covariance: affine postcomposition scales differences") {
    Worldline w = Worldline::make_static(Event{0.0, 2.0, 0.0});
    Clock mono;
    mono.kind = Clock::Kind::monotone;
    mono.amp = 0.2;
    mono.freq = 0.7;
    Emitter base{"B", w, mono};
    // affine(r, b) applied on top of the stamps
    double r = 3.0, b = -1.0;
    auto stamped = [&](double s) { return r * base.stamp(s) + b; };
    double d1 = stamped(5.0) - stamped(2.0);
    double d0 = base.stamp(5.0) - base.stamp(2.0);
    CHECK(d1 == doctest::Approx(r * d0).epsilon(1e-13));
}

TEST_CASE("invalid clocks are rejected") {
    Clock c;
    c.kind = Clock::Kind::affine;
    c.rate = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    Clock m;
    m.kind = Clock::Kind::monotone;
    m.amp = 2.0;
    m.freq = 1.0;
    CHECK_THROWS_AS(m.validate(), ConfigError);
}

TEST_CASE("message coordinate on the main branch") {
    AnchoringWorldline a;
    a.emitter = {"S", Worldline::make_static(Event{0.0, 3.0, 4.0}), Clock{}};
    a.origin_parameter = -50.0;
    // seed an event on the future cone of the worldline point at s = 4
    Event o = a.emitter.worldline.eval(4.0);
    Event e{o.t() + 5.0, o.coords[1] + 3.0, o.coords[2] + 4.0};
    CHECK(message_coordinate(a, e, {-100.0, 100.0}) ==
          doctest::Approx(a.emitter.stamp(4.0)).epsilon(1e-12));
    // degenerate: e on the worldline itself
    CHECK(message_coordinate(a, a.emitter.worldline.eval(2.0),
                             {-100.0, 100.0}) ==
          doctest::Approx(a.emitter.stamp(2.0)).epsilon(1e-10));
}

TEST_CASE("message coordinate falls back to the prolongation") {
    AnchoringWorldline a;
    a.emitter = {"S",
                 Worldline::make_circular(3, 0.0, Eigen::Vector2d(0.0, 0.0),
                                          2.0, 0.3),
                 Clock{}};
    a.origin_parameter = 0.0;
    // event so early that the exchange point precedes the origin o
    Event pre = a.eval(-6.0);
    Event e{pre.t() + 5.0, pre.coords[1] + 5.0, pre.coords[2]};
    double tau = message_coordinate(a, e, {-100.0, 100.0});
    CHECK(tau == doctest::Approx(a.stamp(-6.0)).epsilon(1e-10));
    // the prolongation joins the main branch continuously at o
    CHECK((a.eval(-1e-9).coords - a.eval(0.0).coords).norm() < 1e-8);
}

TEST_CASE("message coordinate is monotone along a timelike probe curve") {
    AnchoringWorldline a;
    a.emitter = {"S", Worldline::make_static(Event{0.0, 5.0, 0.0}), Clock{}};
    a.origin_parameter = -100.0;
    double prev = -1e30;
    for (int i = 0; i < 50; ++i) {
        double t = -5.0 + 0.3 * i;
        Event e{t, 0.2 * std::sin(0.1 * t), 0.1 * t};
        double tau = message_coordinate(a, e, {-200.0, 200.0});
        CHECK(tau > prev);
        prev = tau;
    }
}
