#include <cmath>
#include <random>

#include "doctest.h"
#include "rls/projective.hpp"
#include "rls/scenario.hpp"

using namespace rls;
using namespace rls::projective;

namespace {
std::mt19937_64 rng(7);
double u(double lo, double hi) { return uniform_from_bits(rng(), lo, hi); }
} // namespace

TEST_CASE("cross ratio bracket") {
    ProjPoint1 p = cross_ratio(2.0, 3.0, 1.0);
    CHECK(p.value() == doctest::Approx(0.5));
    CHECK(cross_ratio(1.0, 3.0, 1.0).value() == doctest::Approx(0.0));
    CHECK(cross_ratio(2.0, 1.0, 1.0).is_infinite());
    CHECK_THROWS_AS(cross_ratio(1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("frame change through canonical points") {
    FrameChange1 k = solve_frame_change_rp1(ProjPoint1::from_value(0.0),
                                            ProjPoint1::infinity(),
                                            ProjPoint1::from_value(1.0));
    // identity up to scale
    CHECK(std::abs(k(0, 1)) < 1e-15);
    CHECK(std::abs(k(1, 0)) < 1e-15);
    CHECK(k(0, 0) / k(1, 1) == doctest::Approx(1.0));
    CHECK_THROWS_AS(solve_frame_change_rp1(2.0, 2.0, 1.0), SingularError);
}

TEST_CASE("frame change reproduces the fractional formula") {
    // targets (0 -> 2, inf -> 3, 1 -> 1): the bracket [2:3:1] is 0.5 and the
    // image of t is (2 - 3 * 0.5 t) / (1 - 0.5 t)
    FrameChange1 k = solve_frame_change_rp1(2.0, 3.0, 1.0);
    CHECK(apply_moebius(k, {-1.0, 1.0}).value() ==
          doctest::Approx(7.0 / 3.0).epsilon(1e-14));
    double x = cross_ratio(2.0, 3.0, 1.0).value();
    for (int i = 0; i < 20; ++i) {
        double t = u(-4.0, 4.0);
        double expect = (2.0 - 3.0 * x * t) / (1.0 - x * t);
        CHECK(apply_moebius(k, ProjPoint1::from_value(t)).value() ==
              doctest::Approx(expect).epsilon(1e-12));
    }
    // column readout at infinity
    ProjPoint1 inf_img = apply_moebius(k, ProjPoint1::infinity());
    CHECK(inf_img.value() == doctest::Approx(3.0));
}

TEST_CASE("normalize_rp1 inverts the frame solve") {
    ProjPoint1 z = ProjPoint1::from_value(2.0);
    ProjPoint1 i = ProjPoint1::from_value(3.0);
    ProjPoint1 o = ProjPoint1::from_value(1.0);
    CHECK(proj_distance(normalize_rp1(z, z, i, o), {0.0, 1.0}) < 1e-13);
    CHECK(proj_distance(normalize_rp1(i, z, i, o), {1.0, 0.0}) < 1e-13);
    CHECK(proj_distance(normalize_rp1(o, z, i, o), {1.0, 1.0}) < 1e-13);
}

TEST_CASE("moebius coefficients") {
    MoebiusCoefficients c = moebius_coefficients(2.0, 3.0, 1.0);
    CHECK(c.uq == doctest::Approx(-3.0));
    CHECK(c.vq == doctest::Approx(4.0));
    CHECK(c.wl == doctest::Approx(-1.0));
    CHECK(c.kl == doctest::Approx(2.0));
    CHECK(apply_fraction(c, 0.0) == doctest::Approx(2.0));
    CHECK(apply_fraction(c, 1.0) == doctest::Approx(1.0));
    // collapsed frame limit: wl = 0, quotient stays tau_zero at finite t
    MoebiusCoefficients z = moebius_coefficients(2.0, 3.0, 2.0);
    CHECK(z.wl == 0.0);
    CHECK(apply_fraction(z, 0.7) == doctest::Approx(2.0));
    // degree-2 / degree-1 homogeneity in the stamps
    double s = 3.0;
    MoebiusCoefficients cs = moebius_coefficients(2.0 * s, 3.0 * s, 1.0 * s);
    CHECK(cs.uq == doctest::Approx(s * s * c.uq));
    CHECK(cs.vq == doctest::Approx(s * s * c.vq));
    CHECK(cs.wl == doctest::Approx(s * c.wl));
    CHECK(cs.kl == doctest::Approx(s * c.kl));
}

TEST_CASE("fractional PGL(4) action") {
    std::array<double, 3> t{0.4, -1.2, 2.5};
    CHECK(pgl4_act(Eigen::Matrix4d::Identity(), t) == t);
    Eigen::Matrix4d diag = Eigen::Vector4d(2.0, 2.0, 2.0, 1.0).asDiagonal();
    auto doubled = pgl4_act(diag, t);
    for (int i = 0; i < 3; ++i)
        CHECK(doubled[(size_t)i] == doctest::Approx(2.0 * t[(size_t)i]));
    // inverse composition round trip
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::Matrix4d p;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) p(i, j) = u(-2.0, 2.0);
        if (std::abs(p.determinant()) < 0.1) continue;
        std::array<double, 3> in{u(-3.0, 3.0), u(-3.0, 3.0), u(-3.0, 3.0)};
        auto round = pgl4_act(p.inverse(), pgl4_act(p, in));
        for (int i = 0; i < 3; ++i)
            CHECK(round[(size_t)i] ==
                  doctest::Approx(in[(size_t)i]).epsilon(1e-9));
    }
}

TEST_CASE("common denominator element") {
    std::array<MoebiusCoefficients, 3> unit;
    for (auto& c : unit) {
        c.uq = 1.0;
        c.vq = 0.0;
        c.wl = 1.0;
        c.kl = 0.0;
    }
    Eigen::Matrix4d p = common_denominator_P(unit);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(p(i, j) == doctest::Approx(1.0)); // (w_j + k_j - k_i)/w_i
    // equal denominators for random admissible coefficient triples
    for (int trial = 0; trial < 20; ++trial) {
        std::array<MoebiusCoefficients, 3> c;
        for (auto& ci : c)
            ci = moebius_coefficients(u(-5.0, 5.0), u(-5.0, 5.0),
                                      u(-5.0, 5.0));
        if (c[0].wl == 0.0 || c[1].wl == 0.0 || c[2].wl == 0.0) continue;
        Eigen::Matrix4d pm = common_denominator_P(c);
        for (int inner = 0; inner < 50; ++inner) {
            Eigen::Vector4d t(u(-3.0, 3.0), u(-3.0, 3.0), u(-3.0, 3.0), 1.0);
            Eigen::Vector3d den;
            for (int i = 0; i < 3; ++i)
                den[i] = (c[(size_t)i].wl * pm.row(i) +
                          c[(size_t)i].kl * pm.row(3))
                             .dot(t);
            CHECK((den.maxCoeff() - den.minCoeff()) <=
                  1e-12 * std::max(1.0, den.cwiseAbs().maxCoeff()));
        }
    }
    std::array<MoebiusCoefficients, 3> bad = unit;
    bad[1].wl = 0.0;
    CHECK_THROWS_AS(common_denominator_P(bad), SingularError);
}

TEST_CASE("soldering map reproduces the station fractions") {
    int usable = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::array<MoebiusCoefficients, 3> c;
        bool ok = true;
        for (auto& ci : c) {
            ci = moebius_coefficients(u(-5.0, 5.0), u(-5.0, 5.0),
                                      u(-5.0, 5.0));
            if (std::abs(ci.wl) < 1e-3) ok = false;
        }
        if (!ok) continue;
        SolderingMap m;
        try {
            m = soldering_map(c);
        } catch (const SingularError&) {
            continue;
        }
        ++usable;
        // on equal-denominator tangent triples the map reproduces every
        // station fraction at once
        for (int inner = 0; inner < 20; ++inner) {
            double q = u(-4.0, 4.0);
            std::array<double, 3> tangents;
            for (int i = 0; i < 3; ++i)
                tangents[(size_t)i] =
                    (q - c[(size_t)i].kl) / c[(size_t)i].wl;
            Eigen::Vector4d img = m.m * Eigen::Vector4d(tangents[0],
                                                        tangents[1],
                                                        tangents[2], 1.0);
            if (std::abs(q) < 1e-3) continue; // fraction pole
            for (int i = 0; i < 3; ++i) {
                double expect =
                    apply_fraction(c[(size_t)i], tangents[(size_t)i]);
                CHECK(img[i] / img[3] ==
                      doctest::Approx(expect).epsilon(1e-9));
            }
        }
        // the direction of that locus maps to the virtual stamps u/w
        Eigen::Vector3d dir(1.0 / c[0].wl, 1.0 / c[1].wl, 1.0 / c[2].wl);
        ProjPoint3 vp = vanishing_point(m, ProjPoint2(dir));
        Eigen::Vector3d expect_vp(c[0].uq / c[0].wl, c[1].uq / c[1].wl,
                                  c[2].uq / c[2].wl);
        CHECK((vp.dehomogenize() - expect_vp).norm() < 1e-9);
    }
    CHECK(usable > 10); // the property checks must not be vacuous
}

TEST_CASE("vanishing points and anchoring") {
    SolderingMap id;
    ProjPoint3 vp = vanishing_point(id, {1.0, 2.0, 3.0});
    CHECK(vp.is_at_infinity());
    CHECK_THROWS_AS(vanishing_point(id, {0.0, 0.0, 0.0}), DomainError);
    SolderingMap anchored = anchor_at(id, {1.0, -2.0, 0.5});
    Eigen::Vector4d base = anchored.m * Eigen::Vector4d(0, 0, 0, 1);
    CHECK((base - Eigen::Vector4d(1.0, -2.0, 0.5, 1.0)).norm() < 1e-15);
}

TEST_CASE("groupoid identity and composition") {
    std::array<MoebiusCoefficients, 3> c1{moebius_coefficients(2.0, 3.0, 1.0),
                                          moebius_coefficients(-1.0, 4.0, 2.0),
                                          moebius_coefficients(5.0, -2.0, 0.5)};
    std::array<MoebiusCoefficients, 3> c2 = c1;
    c2[1] = moebius_coefficients(4.0, -1.0, 2.0);
    SolderingMap a = soldering_map(c1);
    SolderingMap b = soldering_map(c2);
    GroupoidElement id = groupoid_pt(a, a, "e", "e");
    CHECK(matrix_proj_distance(id.m, Eigen::Matrix4d::Identity()) < 1e-12);
    GroupoidElement ab = groupoid_pt(a, b, "a", "b");
    GroupoidElement ba = groupoid_pt(b, a, "b", "a");
    GroupoidElement round = compose(ba, ab);
    CHECK(round.source_id == "a");
    CHECK(round.target_id == "a");
    CHECK(matrix_proj_distance(round.m, Eigen::Matrix4d::Identity()) < 1e-11);
}

TEST_CASE("RP2 frame change") {
    std::array<ProjPoint2, 4> canonical{ProjPoint2{1, 0, 0},
                                        ProjPoint2{0, 1, 0},
                                        ProjPoint2{0, 0, 1},
                                        ProjPoint2{1, 1, 1}};
    FrameChange2 k = solve_frame_change_rp2(canonical);
    CHECK((k / k(0, 0) - Eigen::Matrix3d::Identity()).norm() < 1e-13);
    // reprojection residual for random general-position targets
    for (int trial = 0; trial < 20; ++trial) {
        std::array<ProjPoint2, 4> t;
        for (auto& p : t)
            p = ProjPoint2(u(-3.0, 3.0), u(-3.0, 3.0), u(-3.0, 3.0));
        FrameChange2 kk;
        try {
            kk = solve_frame_change_rp2(t);
        } catch (const SingularError&) {
            continue;
        }
        std::array<Eigen::Vector3d, 4> canon{
            Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0),
            Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(1, 1, 1)};
        for (int i = 0; i < 4; ++i) {
            ProjPoint2 img(Eigen::Vector3d(kk * canon[(size_t)i]));
            CHECK(proj_distance(img, t[(size_t)i]) < 1e-12);
        }
    }
    std::array<ProjPoint2, 4> collinear{ProjPoint2{1, 0, 0},
                                        ProjPoint2{2, 0, 0},
                                        ProjPoint2{0, 0, 1},
                                        ProjPoint2{1, 1, 1}};
    CHECK_THROWS_AS(solve_frame_change_rp2(collinear), SingularError);
}

TEST_CASE("birationality of the frame maps") {
    FrameChange1 k = solve_frame_change_rp1(2.0, 3.0, 1.0);
    Eigen::Matrix2d kinv = k.inverse();
    for (int i = 0; i < 1000; ++i) {
        ProjPoint1 p{u(-5.0, 5.0), u(-5.0, 5.0)};
        ProjPoint1 back = apply_moebius(kinv, apply_moebius(k, p));
        CHECK(proj_distance(back, p) < 1e-12);
    }
}
