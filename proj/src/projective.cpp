#include "rls/projective.hpp"

#include <cmath>

namespace rls::projective {

namespace {

// scale to unit max-norm and make the first dominant component positive
template <typename Vec> Vec canonical(const Vec& v) {
    double m = v.cwiseAbs().maxCoeff();
    if (m == 0.0) throw DomainError("projective point: all components zero");
    Vec out = v / m;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (std::abs(out[i]) >= 0.5) {
            if (out[i] < 0.0) out = -out;
            break;
        }
    }
    return out;
}

} // namespace

ProjPoint1 ProjPoint1::normalized() const { return ProjPoint1(canonical(h)); }
ProjPoint2 ProjPoint2::normalized() const { return ProjPoint2(canonical(h)); }
ProjPoint3 ProjPoint3::normalized() const { return ProjPoint3(canonical(h)); }

Eigen::Vector3d ProjPoint3::dehomogenize() const {
    if (is_at_infinity())
        throw DomainError("dehomogenize: point at infinity");
    return h.head<3>() / h[3];
}

double proj_distance(const ProjPoint1& a, const ProjPoint1& b) {
    return (a.normalized().h - b.normalized().h).norm();
}

double proj_distance(const ProjPoint2& a, const ProjPoint2& b) {
    return (a.normalized().h - b.normalized().h).norm();
}

ProjPoint1 cross_ratio(double a, double b, double c) {
    if (a == c && b == c)
        throw DomainError("cross_ratio: indeterminate [0:0]");
    return {a - c, b - c};
}

FrameChange1 solve_frame_change_rp1(const ProjPoint1& target_zero,
                                    const ProjPoint1& target_inf,
                                    const ProjPoint1& target_one) {
    // columns: K [1,0] ~ target_inf, K [0,1] ~ target_zero; the scales come
    // from matching target_one
    Eigen::Matrix2d a;
    a.col(0) = target_inf.normalized().h;
    a.col(1) = target_zero.normalized().h;
    double det = a.determinant();
    if (std::abs(det) < 1e-12)
        throw SingularError("frame change: coincident targets");
    Eigen::Vector2d s = a.partialPivLu().solve(target_one.normalized().h);
    if (std::abs(s[0]) < 1e-12 || std::abs(s[1]) < 1e-12)
        throw SingularError("frame change: unit target coincides with another");
    FrameChange1 k;
    k.col(0) = s[0] * a.col(0);
    k.col(1) = s[1] * a.col(1);
    return k;
}

FrameChange1 solve_frame_change_rp1(double target_zero, double target_inf,
                                    double target_one) {
    return solve_frame_change_rp1(ProjPoint1::from_value(target_zero),
                                  ProjPoint1::from_value(target_inf),
                                  ProjPoint1::from_value(target_one));
}

ProjPoint1 apply_moebius(const FrameChange1& k, const ProjPoint1& t) {
    return ProjPoint1(Eigen::Vector2d(k * t.h));
}

ProjPoint1 normalize_rp1(const ProjPoint1& p, const ProjPoint1& ref_zero,
                         const ProjPoint1& ref_inf, const ProjPoint1& ref_one) {
    FrameChange1 k = solve_frame_change_rp1(ref_zero, ref_inf, ref_one);
    return ProjPoint1(Eigen::Vector2d(k.partialPivLu().solve(p.h)));
}

MoebiusCoefficients moebius_coefficients(double t_zero, double t_inf,
                                         double t_one) {
    MoebiusCoefficients c;
    c.uq = -t_inf * (t_zero - t_one);
    c.vq = t_zero * (t_inf - t_one);
    c.wl = -(t_zero - t_one);
    c.kl = (t_inf - t_one);
    if (c.wl == 0.0 && c.kl == 0.0)
        throw SingularError("moebius_coefficients: collapsed stamp triple");
    return c;
}

double apply_fraction(const MoebiusCoefficients& c, double t) {
    double den = c.wl * t + c.kl;
    if (den == 0.0) throw SingularError("apply_fraction: pole of the map");
    return (c.uq * t + c.vq) / den;
}

std::array<double, 3> pgl4_act(const Eigen::Matrix4d& p,
                               const std::array<double, 3>& tangents) {
    Eigen::Vector4d v(tangents[0], tangents[1], tangents[2], 1.0);
    Eigen::Vector4d w = p * v;
    double scale = w.cwiseAbs().maxCoeff();
    if (std::abs(w[3]) <= 1e-14 * scale)
        throw SingularError("pgl4_act: input on the exceptional plane");
    return {w[0] / w[3], w[1] / w[3], w[2] / w[3]};
}

Eigen::Matrix4d common_denominator_P(
    const std::array<MoebiusCoefficients, 3>& coeffs) {
    for (const auto& c : coeffs)
        if (c.wl == 0.0)
            throw SingularError("common_denominator_P: vanishing w coefficient");
    const double w1 = coeffs[0].wl, w2 = coeffs[1].wl, w3 = coeffs[2].wl;
    const double k1 = coeffs[0].kl, k2 = coeffs[1].kl, k3 = coeffs[2].kl;
    Eigen::Matrix4d p;
    p << 1.0, (w2 + k2 - k1) / w1, (w3 + k3 - k1) / w1, (w3 + k3 - k1) / w1,
        (w1 + k1 - k2) / w2, 1.0, (w3 + k3 - k2) / w2, (w3 + k3 - k2) / w2,
        (w1 + k1 - k3) / w3, (w2 + k2 - k3) / w3, 1.0, 1.0,
        1.0, 1.0, 1.0, 1.0;
    return p;
}

SolderingMap soldering_map(const std::array<MoebiusCoefficients, 3>& coeffs) {
    for (const auto& c : coeffs)
        if (c.wl == 0.0)
            throw SingularError("soldering_map: vanishing w coefficient");
    // A projective change of tangent coordinates cannot equalize three
    // independent fractional-linear denominators everywhere: the
    // equal-denominator condition forces every preconditioner row into the
    // span of the shared coefficient vector and the all-ones row, a rank-2
    // family. The invertible representative keeps each station numerator as
    // its own row and takes the symmetric mean of the denominators as the
    // last row; on the locus where the station denominators coincide (the
    // image of the common-denominator element) the dehomogenized image
    // reproduces all three fractions exactly.
    SolderingMap m;
    m.m.setZero();
    for (int i = 0; i < 3; ++i) {
        m.m(i, i) = coeffs[(size_t)i].uq;
        m.m(i, 3) = coeffs[(size_t)i].vq;
        m.m(3, i) = coeffs[(size_t)i].wl / 3.0;
    }
    m.m(3, 3) = (coeffs[0].kl + coeffs[1].kl + coeffs[2].kl) / 3.0;
    Eigen::FullPivLU<Eigen::Matrix4d> lu(m.m);
    lu.setThreshold(1e-12);
    if (lu.rank() < 4)
        throw SingularError("soldering_map: singular coefficient set");
    return m;
}

ProjPoint3 vanishing_point(const SolderingMap& m, const ProjPoint2& direction) {
    if (direction.h.cwiseAbs().maxCoeff() == 0.0)
        throw DomainError("vanishing_point: zero direction");
    Eigen::Vector4d v(direction.h[0], direction.h[1], direction.h[2], 0.0);
    return ProjPoint3(Eigen::Vector4d(m.m * v));
}

SolderingMap anchor_at(const SolderingMap& m,
                       const std::array<double, 3>& tangents) {
    Eigen::Matrix4d t = Eigen::Matrix4d::Identity();
    t(0, 3) = tangents[0];
    t(1, 3) = tangents[1];
    t(2, 3) = tangents[2];
    SolderingMap out;
    out.m = m.m * t;
    return out;
}

GroupoidElement groupoid_pt(const SolderingMap& source,
                            const SolderingMap& target,
                            const std::string& source_id,
                            const std::string& target_id) {
    Eigen::FullPivLU<Eigen::Matrix4d> lu(source.m);
    lu.setThreshold(1e-12);
    if (lu.rank() < 4)
        throw SingularError("groupoid_pt: singular source soldering map");
    GroupoidElement g;
    g.source_id = source_id;
    g.target_id = target_id;
    g.m = target.m * lu.inverse();
    // scale-free storage keeps compositions well-conditioned
    g.m /= g.m.cwiseAbs().maxCoeff();
    return g;
}

GroupoidElement compose(const GroupoidElement& second,
                        const GroupoidElement& first) {
    GroupoidElement g;
    g.source_id = first.source_id;
    g.target_id = second.target_id;
    g.m = second.m * first.m;
    g.m /= g.m.cwiseAbs().maxCoeff();
    return g;
}

FrameChange2 solve_frame_change_rp2(const std::array<ProjPoint2, 4>& targets) {
    Eigen::Matrix3d a;
    for (int i = 0; i < 3; ++i) a.col(i) = targets[i].normalized().h;
    Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
    lu.setThreshold(1e-12);
    if (lu.rank() < 3)
        throw SingularError("frame change: collinear targets");
    Eigen::Vector3d s = lu.solve(targets[3].normalized().h);
    for (int i = 0; i < 3; ++i)
        if (std::abs(s[i]) < 1e-12)
            throw SingularError(
                "frame change: unit target collinear with two others");
    FrameChange2 k;
    for (int i = 0; i < 3; ++i) k.col(i) = s[i] * a.col(i);
    return k;
}

ProjPoint2 normalize_rp2(const ProjPoint2& p,
                         const std::array<ProjPoint2, 4>& refs) {
    FrameChange2 k = solve_frame_change_rp2(refs);
    return ProjPoint2(Eigen::Vector3d(k.partialPivLu().solve(p.h)));
}

double matrix_proj_distance(const Eigen::Matrix4d& a,
                            const Eigen::Matrix4d& b) {
    auto canon = [](const Eigen::Matrix4d& m) {
        double s = m.cwiseAbs().maxCoeff();
        if (s == 0.0) throw DomainError("matrix_proj_distance: zero matrix");
        Eigen::Matrix4d out = m / s;
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i)
                if (std::abs(out(i, j)) >= 0.5) {
                    if (out(i, j) < 0.0) out = -out;
                    return out;
                }
        return out;
    };
    return (canon(a) - canon(b)).norm();
}

} // namespace rls::projective
