#include "rls/localization.hpp"

#include <cmath>

namespace rls {

EmissionPosition localize_2d(const EmissionPosition& e1,
                             const EmissionPosition& e2) {
    if (e1.stamps.size() != 2 || e2.stamps.size() != 2)
        throw DimensionError("localize_2d: need 2-stamp positions");
    // each reception record keeps one of e's null coordinates unchanged:
    // the first from the second station, the second from the first
    EmissionPosition out;
    out.stamps.resize(2);
    out.stamps << e2.stamps[0], e1.stamps[1];
    return out;
}

Eigen::Vector3d circumcenter(const Eigen::Vector3d& u,
                             const Eigen::Vector3d& r1,
                             const Eigen::Vector3d& r2) {
    Eigen::Vector3d cross = r1.cross(r2);
    double n2 = cross.squaredNorm();
    double scale = std::max(r1.squaredNorm(), r2.squaredNorm());
    if (n2 <= 1e-24 * scale * scale)
        throw SingularError("circumcenter: parallel relative vectors");
    Eigen::Vector3d num =
        (r1.squaredNorm() * r2 - r2.squaredNorm() * r1).cross(cross);
    return u + num / (2.0 * n2);
}

namespace {

struct StationPlane {
    Eigen::Vector3d apex;
    Eigen::Vector3d v_plus;
    Eigen::Vector3d v_minus;
    Eigen::Vector3d center;
};

StationPlane station_plane(const PlaneStationInput& in) {
    StationPlane sp;
    sp.apex = in.apex;
    sp.center = circumcenter(in.p_user, in.p_first - in.p_user,
                             in.p_second - in.p_user);
    Eigen::Vector3d ec = sp.center - in.apex;
    Eigen::Vector3d cp1 = in.p_first - sp.center;
    Eigen::Vector3d cp2 = in.p_second - sp.center;
    Eigen::Vector3d mix = cp1 + in.tan_alpha * cp2;
    sp.v_plus = ec + mix;
    sp.v_minus = ec - mix;
    return sp;
}

} // namespace

PlaneSolution3D localize_3d_planes(const std::array<PlaneStationInput, 3>& in) {
    std::array<StationPlane, 3> planes{station_plane(in[0]),
                                       station_plane(in[1]),
                                       station_plane(in[2])};
    // six equations: the points apex_i + a_i+ v_i+ + a_i- v_i- agree for the
    // three stations (station 0 vs 1 and station 0 vs 2)
    Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Zero();
    Eigen::Matrix<double, 6, 1> rhs;
    for (int pair = 0; pair < 2; ++pair) {
        const StationPlane& other = planes[(size_t)(pair + 1)];
        m.block<3, 1>(3 * pair, 0) = planes[0].v_plus;
        m.block<3, 1>(3 * pair, 1) = planes[0].v_minus;
        m.block<3, 1>(3 * pair, 2 * pair + 2) = -other.v_plus;
        m.block<3, 1>(3 * pair, 2 * pair + 3) = -other.v_minus;
        rhs.segment<3>(3 * pair) = other.apex - planes[0].apex;
    }
    Eigen::FullPivLU<Eigen::Matrix<double, 6, 6>> lu(m);
    lu.setThreshold(1e-10);
    if (lu.rank() < 6)
        throw SingularError("localize_3d_planes: singular six-equation system");
    PlaneSolution3D out;
    out.coefficients = lu.solve(rhs);
    for (int i = 0; i < 3; ++i) {
        out.circumcenters[(size_t)i] = planes[(size_t)i].center;
        out.v_plus[(size_t)i] = planes[(size_t)i].v_plus;
        out.v_minus[(size_t)i] = planes[(size_t)i].v_minus;
    }
    out.recovered = planes[0].apex + out.coefficients[0] * planes[0].v_plus +
                    out.coefficients[1] * planes[0].v_minus;
    Eigen::Vector3d p1 = planes[1].apex + out.coefficients[2] * planes[1].v_plus +
                         out.coefficients[3] * planes[1].v_minus;
    Eigen::Vector3d p2 = planes[2].apex + out.coefficients[4] * planes[2].v_plus +
                         out.coefficients[5] * planes[2].v_minus;
    out.residual = std::max((p1 - out.recovered).norm(),
                            (p2 - out.recovered).norm());
    return out;
}

double plane_angle_oracle(const PlaneStationInput& station,
                          const Eigen::Vector3d& target) {
    // the station plane is apex + span{EC, CP1 + t CP2}; membership of the
    // target is linear in t
    Eigen::Vector3d center = circumcenter(
        station.p_user, station.p_first - station.p_user,
        station.p_second - station.p_user);
    Eigen::Vector3d ec = center - station.apex;
    Eigen::Vector3d cp1 = station.p_first - center;
    Eigen::Vector3d cp2 = station.p_second - center;
    Eigen::Vector3d et = target - station.apex;
    double num = ec.cross(cp1).dot(et);
    double den = ec.cross(cp2).dot(et);
    if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num)))
        throw SingularError("plane_angle_oracle: degenerate configuration");
    return -num / den;
}

StereoPosition localize_3d_intrinsic(
    const std::array<IntrinsicStation, 3>& in) {
    StereoPosition out;
    out.stamps.resize(3);
    for (int i = 0; i < 3; ++i) {
        const IntrinsicStation& st = in[(size_t)i];
        projective::FrameChange1 k = projective::solve_frame_change_rp1(
            st.target_zero, st.target_inf, st.target_one);
        projective::ProjPoint1 tau = projective::apply_moebius(k, st.reading);
        if (tau.is_infinite())
            throw SingularError(
                "localize_3d_intrinsic: reading maps to infinity");
        out.stamps[i] = tau.value();
    }
    return out;
}

StereoPosition localize_3d_intrinsic(const std::array<IntrinsicStation, 3>& in,
                                     double anchor) {
    StereoPosition out = localize_3d_intrinsic(in);
    out.anchor = anchor;
    out.has_anchor = true;
    return out;
}

std::array<IntrinsicStation, 3> intrinsic_stations(
    const Echo3D& echo, const std::array<projective::ProjPoint1, 3>& readings) {
    std::array<IntrinsicStation, 3> out;
    for (int i = 0; i < 3; ++i) {
        const EchoRecord3D& rec = echo.records[(size_t)i];
        out[(size_t)i].target_zero = rec.first_triple[(size_t)i];
        out[(size_t)i].target_inf = rec.second_triple[(size_t)i];
        out[(size_t)i].target_one = rec.fifth_stamp;
        out[(size_t)i].reading = readings[(size_t)i];
    }
    return out;
}

std::array<double, 2> localize_station_4d(const Station4DInput& in) {
    // the free parameter of the second row is fixed at the station's own
    // localizing-satellite stamp, so both rows share it
    const double lam = in.fifth_stamp;
    Eigen::Matrix2d m;
    m << in.a[0] - lam, in.b[0] - lam, in.a[1] - lam, in.b[1] - lam;
    Eigen::Vector2d rhs(-(in.c[0] - lam), -(in.c[1] - lam));
    double det = m.determinant();
    double scale = std::max({std::abs(m(0, 0)), std::abs(m(0, 1)),
                             std::abs(m(1, 0)), std::abs(m(1, 1)), 1.0});
    if (std::abs(det) <= 1e-14 * scale * scale)
        throw SingularError("localize_station_4d: singular station system");
    Eigen::Vector2d xy = m.partialPivLu().solve(rhs);
    double den = xy[0] * in.tan_alpha + xy[1] * in.tan_beta + 1.0;
    if (std::abs(den) <= 1e-14)
        throw SingularError("localize_station_4d: vanishing denominator");
    double first = (in.a[0] * xy[0] * in.tan_alpha +
                    in.b[0] * xy[1] * in.tan_beta + in.c[0]) /
                   den;
    double second = (in.a[1] * xy[0] * in.tan_alpha +
                     in.b[1] * xy[1] * in.tan_beta + in.c[1]) /
                    den;
    return {first, second};
}

StereoPosition localize_4d(const std::array<Station4DInput, 4>& in,
                           double anchor, double tolerance) {
    std::array<std::array<double, 2>, 4> outs;
    for (int i = 0; i < 4; ++i) outs[(size_t)i] = localize_station_4d(in[(size_t)i]);
    StereoPosition out;
    out.stamps.resize(4);
    // designated coordinates: first pair from station 0, second pair from
    // station 2
    out.stamps << outs[0][0], outs[0][1], outs[2][0], outs[2][1];
    out.anchor = anchor;
    out.has_anchor = true;
    // each coordinate is produced by two stations; the four mismatches are
    // the protocol's consistency constraints
    out.constraint_residuals.resize(4);
    out.constraint_residuals << outs[0][0] - outs[3][1],
        outs[0][1] - outs[1][0], outs[1][1] - outs[2][0],
        outs[2][1] - outs[3][0];
    out.within_tolerance =
        out.constraint_residuals.cwiseAbs().maxCoeff() <= tolerance;
    return out;
}

std::array<Station4DInput, 4> stations_4d(
    const Echo4D& echo, const std::array<projective::ProjPoint2, 4>& readings) {
    std::array<Station4DInput, 4> out;
    for (int i = 0; i < 4; ++i) {
        const StationRecord4D& rec = echo.stations[(size_t)i];
        Station4DInput& st = out[(size_t)i];
        const int p = rec.pair_first, q = rec.pair_second;
        st.a = {rec.ref_positions[0][p], rec.ref_positions[0][q]};
        st.b = {rec.ref_positions[1][p], rec.ref_positions[1][q]};
        st.c = {rec.ref_positions[2][p], rec.ref_positions[2][q]};
        st.fifth_stamp = rec.fifth_stamp;
        const projective::ProjPoint2& r = readings[(size_t)i];
        if (std::abs(r.h[2]) <= 1e-14 * r.h.cwiseAbs().maxCoeff())
            throw SingularError("stations_4d: reading at infinity");
        st.tan_alpha = r.h[0] / r.h[2];
        st.tan_beta = r.h[1] / r.h[2];
    }
    return out;
}

Eigen::VectorXd embed_event(const StereoPosition& p) {
    if (!p.has_anchor)
        throw DomainError("embed_event: missing anchor coordinate");
    Eigen::VectorXd out(p.stamps.size() + 1);
    out.head(p.stamps.size()) = p.stamps;
    out[p.stamps.size()] = p.anchor;
    return out;
}

} // namespace rls
