#include "rls/observation.hpp"

#include <cmath>

namespace rls {

namespace {

double eta(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return a[0] * b[0] - a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

} // namespace

Tetrad tetrad_at(const Emitter& e, double s,
                 const Eigen::MatrixXd& spatial_seed) {
    const int d = e.worldline.dim();
    if (spatial_seed.rows() != d - 1 || spatial_seed.cols() != d - 1)
        throw DimensionError("tetrad_at: seed must be (d-1) x (d-1)");
    Tetrad t;
    t.base = e.worldline.eval(s);
    t.legs.resize(d, d);
    Eigen::VectorXd tangent = e.worldline.tangent(s);
    double norm2 = eta(tangent, tangent);
    if (norm2 <= 0.0) throw DomainError("tetrad_at: tangent not timelike");
    t.legs.col(0) = tangent / std::sqrt(norm2);
    // Gram-Schmidt of the lifted seed directions against the Minkowski metric
    for (int j = 1; j < d; ++j) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
        v.tail(d - 1) = spatial_seed.col(j - 1);
        v -= eta(v, t.legs.col(0)) * t.legs.col(0); // timelike leg has eta = +1
        for (int k = 1; k < j; ++k)
            v += eta(v, t.legs.col(k)) * t.legs.col(k); // spacelike: eta = -1
        double n2 = -eta(v, v);
        if (n2 <= 1e-24)
            throw SingularError("tetrad_at: degenerate spatial seed");
        t.legs.col(j) = v / std::sqrt(n2);
    }
    // right-handed spatial orientation
    if (t.legs.determinant() < 0.0) t.legs.col(d - 1) = -t.legs.col(d - 1);
    return t;
}

Tetrad tetrad_at(const Emitter& e, double s) {
    const int d = e.worldline.dim();
    return tetrad_at(e, s, Eigen::MatrixXd::Identity(d - 1, d - 1));
}

Direction incoming_direction(const Tetrad& t, const Event& source) {
    if (source.dim() != t.dim())
        throw DimensionError("incoming_direction: dimension mismatch");
    Eigen::VectorXd k = source.coords - t.base.coords;
    double scale = std::max(t.base.coords.cwiseAbs().maxCoeff(),
                            source.coords.cwiseAbs().maxCoeff());
    if (std::abs(eta(k, k)) > 1e-9 * std::max(1.0, scale * scale))
        throw DomainError("incoming_direction: source not null-separated");
    const int d = t.dim();
    Direction dir;
    dir.u.resize(d - 1);
    // spatial components of the past-pointing null vector, oriented toward
    // the source (u_i = -eta(k, leg_i) since spacelike legs square to -1)
    for (int i = 1; i < d; ++i) dir.u[i - 1] = -eta(k, t.legs.col(i));
    double n = dir.u.norm();
    if (n <= 1e-14 * std::max(1.0, scale))
        throw DomainError("incoming_direction: zero spatial part");
    dir.u /= n;
    return dir;
}

HemisphereReading chart_reading(const Direction& dir) {
    HemisphereReading r;
    const Eigen::VectorXd& u = dir.u;
    // celestial circle: angle from spatial leg 1; sphere: gnomonic chart
    // around the last spatial leg
    double den = u.size() == 2 ? u[0] : u[u.size() - 1];
    if (std::abs(den) <= 1e-14) {
        r.tag = Hemisphere::polar_circle;
        r.chart.resize(0);
        return r;
    }
    r.tag = den > 0.0 ? Hemisphere::north : Hemisphere::south;
    if (u.size() == 2) {
        r.chart.resize(1);
        r.chart[0] = u[1] / u[0];
    } else {
        r.chart.resize(2);
        r.chart[0] = u[0] / u[2];
        r.chart[1] = u[1] / u[2];
    }
    return r;
}

int passage_signature(const std::vector<Direction>& trajectory) {
    int total = 0;
    int prev = 0;
    for (const Direction& d : trajectory) {
        double den = d.u.size() == 2 ? d.u[0] : d.u[d.u.size() - 1];
        int s = den > 0.0 ? 1 : (den < 0.0 ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) total += (prev == 1 ? 1 : -1);
        prev = s;
    }
    return total;
}

projective::ProjPoint1 homogeneous_reading_rp1(const Direction& dir) {
    if (dir.u.size() != 2)
        throw DimensionError("homogeneous_reading_rp1: need a 2-direction");
    return {dir.u[1], dir.u[0]};
}

projective::ProjPoint2 homogeneous_reading_rp2(const Direction& dir) {
    if (dir.u.size() != 3)
        throw DimensionError("homogeneous_reading_rp2: need a 3-direction");
    return {dir.u[0], dir.u[1], dir.u[2]};
}

projective::ProjPoint1 normalize_reading_rp1(
    const Direction& e_dir, const std::array<Direction, 3>& refs) {
    return projective::normalize_rp1(homogeneous_reading_rp1(e_dir),
                                     homogeneous_reading_rp1(refs[0]),
                                     homogeneous_reading_rp1(refs[1]),
                                     homogeneous_reading_rp1(refs[2]));
}

projective::ProjPoint2 normalize_reading_rp2(
    const Direction& e_dir, const std::array<Direction, 4>& refs) {
    std::array<projective::ProjPoint2, 4> targets{
        homogeneous_reading_rp2(refs[0]), homogeneous_reading_rp2(refs[1]),
        homogeneous_reading_rp2(refs[2]), homogeneous_reading_rp2(refs[3])};
    return projective::normalize_rp2(homogeneous_reading_rp2(e_dir), targets);
}

} // namespace rls
