#include <cmath>
#include <random>

#include "doctest.h"
#include "rls/constellation.hpp"
#include "rls/geometry.hpp"
#include "rls/scenario.hpp"

using namespace rls;

TEST_CASE("minkowski products and causal classes") {
    Event a{1.0, 0.0, 0.0};
    Event o{0.0, 0.0, 0.0};
    CHECK(minkowski(a, a).value == doctest::Approx(0.0));
    CHECK(minkowski(a, a).causal_class == CausalClass::null_like);
    CHECK(minkowski(a, o).value == doctest::Approx(1.0));
    CHECK(minkowski(a, o).causal_class == CausalClass::timelike);
    Event n{1.0, 1.0, 0.0};
    CHECK(minkowski(n, o).causal_class == CausalClass::null_like);
    Event s{0.0, 2.0, 0.0};
    CHECK(minkowski(s, o).causal_class == CausalClass::spacelike);
    CHECK_THROWS_AS(minkowski(a, Event{0.0, 0.0}), DimensionError);
}

TEST_CASE("emission-sense solve on a static worldline has the closed form") {
    Worldline w = Worldline::make_static(Event{0.0, 0.0, 0.0});
    Event x{10.0, 3.0, 4.0};
    // t - |x| = 10 - 5
    double s = solve_null_past(w, x, {-100.0, 100.0});
    CHECK(s == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(solve_null_future(w, x, {-100.0, 100.0}) ==
          doctest::Approx(5.0).epsilon(1e-12));
    // reception sense: t + |x|
    CHECK(solve_null_reception(w, x, {-100.0, 100.0}) ==
          doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("degenerate solve at a point of the worldline itself") {
    Worldline w = Worldline::make_inertial(Event{0.0, 1.0, 2.0},
                                           Eigen::Vector2d(0.1, 0.0));
    Event x = w.eval(7.0);
    CHECK(solve_null_past(w, x, {0.0, 20.0}) == doctest::Approx(7.0));
}

TEST_CASE("moving emitter matches the hand-solved quadratic") {
    Eigen::Vector2d v(0.5, 0.0);
    Worldline w = Worldline::make_inertial(Event{0.0, 0.0, 0.0}, v);
    Event x{10.0, 3.0, 4.0};
    // (t-s)^2 = |dx - v s|^2 solved independently
    double a = 1.0 - v.squaredNorm();
    Eigen::Vector2d dx = x.spatial();
    double b = 2.0 * (dx.dot(v) - x.t());
    double c = x.t() * x.t() - dx.squaredNorm();
    double s_ret = (-b - std::sqrt(b * b - 4 * a * c)) / (2 * a);
    CHECK(solve_null_past(w, x, {-100.0, 100.0}) ==
          doctest::Approx(s_ret).epsilon(1e-12));
}

TEST_CASE("unbracketed root is reported") {
    Worldline w = Worldline::make_static(Event{0.0, 0.0, 0.0});
    Event x{10.0, 3.0, 4.0};
    CHECK_THROWS_AS(solve_null_past(w, x, {8.0, 9.0}), BracketError);
}

TEST_CASE("cone intersection recovers a seeded event") {
    std::mt19937_64 rng(42);
    auto u = [&](double lo, double hi) {
        return uniform_from_bits(rng(), lo, hi);
    };
    for (int trial = 0; trial < 20; ++trial) {
        int d = 3 + trial % 2;
        Eigen::VectorXd e(d);
        for (int i = 0; i < d; ++i) e[i] = u(-2.0, 2.0);
        // apexes surrounding the event: with one-sided directions the two
        // cone-intersection points can both be admissible, so spread them
        double spin = u(0.0, 6.28);
        std::vector<Event> apexes;
        for (int i = 0; i < d; ++i) {
            Eigen::VectorXd dir(d - 1);
            if (d == 3) {
                double ang = spin + 2.0943951023931953 * i + u(-0.3, 0.3);
                dir << std::cos(ang), std::sin(ang);
            } else {
                // tetrahedral vertices, slightly jittered
                static const double tet[4][3] = {{1, 1, 1},
                                                 {1, -1, -1},
                                                 {-1, 1, -1},
                                                 {-1, -1, 1}};
                for (int k = 0; k < 3; ++k)
                    dir[k] = tet[i][k] + u(-0.2, 0.2);
            }
            dir.normalize();
            double radius = u(5.0, 15.0);
            Eigen::VectorXd a(d);
            a[0] = e[0] + radius; // on the future cone of e
            a.tail(d - 1) = e.tail(d - 1) + radius * dir;
            apexes.push_back(Event(a));
        }
        Event back = intersect_past_cones(apexes);
        CHECK((back.coords - e).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("cone intersection with one-sided apexes is on-cone and causal") {
    std::mt19937_64 rng(43);
    auto u = [&](double lo, double hi) {
        return uniform_from_bits(rng(), lo, hi);
    };
    for (int trial = 0; trial < 20; ++trial) {
        int d = 3 + trial % 2;
        Eigen::VectorXd e(d);
        for (int i = 0; i < d; ++i) e[i] = u(-2.0, 2.0);
        std::vector<Event> apexes;
        for (int i = 0; i < d; ++i) {
            Eigen::VectorXd dir(d - 1);
            for (int k = 0; k < d - 1; ++k) dir[k] = u(-1.0, 1.0);
            dir.normalize();
            double radius = u(5.0, 15.0);
            Eigen::VectorXd a(d);
            a[0] = e[0] + radius;
            a.tail(d - 1) = e.tail(d - 1) + radius * dir;
            apexes.push_back(Event(a));
        }
        // the recovered point must sit on every past cone even when it is
        // the other admissible intersection
        Event back = intersect_past_cones(apexes);
        for (const Event& a : apexes) {
            CHECK(std::abs(minkowski(back, a).value) < 1e-8);
            CHECK(back.t() < a.t());
        }
    }
}

TEST_CASE("cone intersection future branch") {
    Event e{0.5, 0.2, -0.3};
    std::vector<Event> apexes;
    double radii[] = {3.0, 7.0, 11.0};
    double angles[] = {0.3, 2.4, 4.4};
    for (int i = 0; i < 3; ++i) {
        apexes.push_back(Event{e.t() - radii[i],
                               e.coords[1] + radii[i] * std::cos(angles[i]),
                               e.coords[2] + radii[i] * std::sin(angles[i])});
    }
    Event back = intersect_future_cones(apexes);
    CHECK((back.coords - e.coords).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("degenerate apex configurations are rejected") {
    // three apexes with identical spatial position: the pairwise-difference
    // system has no unique solution line
    std::vector<Event> apexes{Event{1.0, 5.0, 0.0}, Event{2.0, 5.0, 0.0},
                              Event{3.0, 5.0, 0.0}};
    CHECK_THROWS_AS(intersect_past_cones(apexes), Error);
}

TEST_CASE("null solves are Poincare covariant") {
    // boost along x: the null condition residual stays tiny when all inputs
    // are transformed together
    double beta = 0.4, gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    auto boost = [&](const Event& ev) {
        Event out = ev;
        out.coords[0] = gamma * (ev.coords[0] - beta * ev.coords[1]);
        out.coords[1] = gamma * (ev.coords[1] - beta * ev.coords[0]);
        return out;
    };
    Worldline w = Worldline::make_inertial(Event{0.0, 2.0, 1.0},
                                           Eigen::Vector2d(0.2, -0.1));
    Event x{12.0, 3.0, 4.0};
    double s = solve_null_past(w, x, {-100.0, 100.0});
    Event emission = w.eval(s);
    // boosted picture: same events, new coordinates; still null separated
    CHECK(std::abs(minkowski(boost(emission), boost(x)).value) < 1e-11 *
                                                                     200.0);
}

TEST_CASE("past and future solves close a light rectangle") {
    Worldline w = Worldline::make_inertial(Event{0.0, 8.0, -3.0},
                                           Eigen::Vector2d(0.0, 0.3));
    Event e{1.0, 0.5, 0.5};
    double s_up = solve_null_reception(w, e, {-100.0, 100.0});
    Event up = w.eval(s_up);
    // the reception event sees e on its own past cone
    CHECK(std::abs(minkowski(up, e).value) < 1e-10);
    CHECK(up.t() > e.t());
    double s_down = solve_null_past(w, e, {-100.0, 100.0});
    Event down = w.eval(s_down);
    CHECK(std::abs(minkowski(down, e).value) < 1e-10);
    CHECK(down.t() < e.t());
}
