#ifndef RLS_PROJECTIVE_HPP
#define RLS_PROJECTIVE_HPP

#include <Eigen/Dense>
#include <array>
#include <limits>
#include <string>

#include "rls/errors.hpp"

// Numerical projective algebra on RP^1 / RP^2 / RP^3: frames and frame
// changes, cross-ratios, fractional-linear (Moebius) maps, the common
// denominator element for three station fractions, soldering maps,
// vanishing points and the groupoid of projective transformations between
// data-points.

namespace rls::projective {

// Homogeneous point [p:q] on the projective line. Equality is scale-free:
// points are compared after normalization to unit max-norm with a canonical
// sign.
struct ProjPoint1 {
    Eigen::Vector2d h{0.0, 1.0};

    ProjPoint1() = default;
    ProjPoint1(double p, double q) : h(p, q) {}
    explicit ProjPoint1(const Eigen::Vector2d& v) : h(v) {}

    static ProjPoint1 from_value(double t) { return {t, 1.0}; }
    static ProjPoint1 infinity() { return {1.0, 0.0}; }

    bool is_infinite(double eps = 1e-14) const {
        return std::abs(h[1]) <= eps * h.cwiseAbs().maxCoeff();
    }
    // dehomogenized value; +-inf for the point at infinity
    double value() const {
        if (h[1] == 0.0) return std::numeric_limits<double>::infinity();
        return h[0] / h[1];
    }
    ProjPoint1 normalized() const;
};

// Homogeneous point [p:q:r] on the projective plane.
struct ProjPoint2 {
    Eigen::Vector3d h{0.0, 0.0, 1.0};

    ProjPoint2() = default;
    ProjPoint2(double p, double q, double r) : h(p, q, r) {}
    explicit ProjPoint2(const Eigen::Vector3d& v) : h(v) {}

    static ProjPoint2 from_chart(double u, double v) { return {u, v, 1.0}; }

    bool is_at_infinity(double eps = 1e-14) const {
        return std::abs(h[2]) <= eps * h.cwiseAbs().maxCoeff();
    }
    Eigen::Vector2d chart() const { return {h[0] / h[2], h[1] / h[2]}; }
    ProjPoint2 normalized() const;
};

// Homogeneous point of RP^3, used for stereometric positions [t1:t2:t3:1]
// and their images at infinity.
struct ProjPoint3 {
    Eigen::Vector4d h{0.0, 0.0, 0.0, 1.0};

    ProjPoint3() = default;
    explicit ProjPoint3(const Eigen::Vector4d& v) : h(v) {}

    bool is_at_infinity(double eps = 1e-14) const {
        return std::abs(h[3]) <= eps * h.cwiseAbs().maxCoeff();
    }
    Eigen::Vector3d dehomogenize() const;
    ProjPoint3 normalized() const;
};

double proj_distance(const ProjPoint1& a, const ProjPoint1& b);
double proj_distance(const ProjPoint2& a, const ProjPoint2& b);

using FrameChange1 = Eigen::Matrix2d; // RP^1 frame change, defined up to scale
using FrameChange2 = Eigen::Matrix3d; // RP^2 frame change, defined up to scale

// Coefficients of one station's fractional-linear map
//   tau(t) = (uq t + vq) / (wl t + kl),
// with (uq, vq) quadratic and (wl, kl) linear in the station's stamp triple.
struct MoebiusCoefficients {
    double uq = 0.0;
    double vq = 0.0;
    double wl = 0.0;
    double kl = 1.0;
};

// 4x4 (3-station protocol) projective-linear identification between the
// space of station tangents and the stereometric grid, up to scale. Rows
// 0..2 carry the station numerators; the last row carries the shared
// denominator, so that on tangent triples with equal station denominators
// the dehomogenized image reproduces all three station fractions exactly.
struct SolderingMap {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
};

struct GroupoidElement {
    std::string source_id;
    std::string target_id;
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
};

// Three-point bracket [(a - c) : (b - c)].
ProjPoint1 cross_ratio(double a, double b, double c);

// Matrix sending [0:1], [1:0], [1:1] to the three targets. Exact at the
// references by construction; throws SingularError for coincident targets.
FrameChange1 solve_frame_change_rp1(const ProjPoint1& target_zero,
                                    const ProjPoint1& target_inf,
                                    const ProjPoint1& target_one);
FrameChange1 solve_frame_change_rp1(double target_zero, double target_inf,
                                    double target_one);

ProjPoint1 apply_moebius(const FrameChange1& k, const ProjPoint1& t);

// Inverse problem: the coordinate of p in the frame sending the three
// references to [0:1], [1:0], [1:1].
ProjPoint1 normalize_rp1(const ProjPoint1& p, const ProjPoint1& ref_zero,
                         const ProjPoint1& ref_inf, const ProjPoint1& ref_one);

// Station map coefficients for reference stamps (t_zero, t_inf, t_one):
//   uq = -t_inf (t_zero - t_one), vq = t_zero (t_inf - t_one),
//   wl = -(t_zero - t_one),       kl =  (t_inf - t_one).
// The quotient (uq t + vq)/(wl t + kl) maps 0 -> t_zero, inf -> t_inf,
// 1 -> t_one.
MoebiusCoefficients moebius_coefficients(double t_zero, double t_inf,
                                         double t_one);

double apply_fraction(const MoebiusCoefficients& c, double t);

// Fractional-linear action of a 4x4 matrix on a triple of tangents:
//   t_i = (sum_j P(i,j) t'_j + P(i,3)) / (sum_k P(3,k) t'_k + P(3,3)).
std::array<double, 3> pgl4_act(const Eigen::Matrix4d& p,
                               const std::array<double, 3>& tangents);

// The tangent-space preconditioner that equalizes the three station
// denominators. Requires wl != 0 for every station.
Eigen::Matrix4d common_denominator_P(
    const std::array<MoebiusCoefficients, 3>& coeffs);

// Composition of the three station fractions with the common-denominator
// element into one projective-linear map [t'1,t'2,t'3,1] -> [tau1,tau2,tau3,1].
SolderingMap soldering_map(const std::array<MoebiusCoefficients, 3>& coeffs);

// Image of a tangent-space direction at infinity. Finite generic case gives
// the common crossing point of all image lines with that direction.
ProjPoint3 vanishing_point(const SolderingMap& m, const ProjPoint2& direction);

// Anchor the soldering map at a tangent triple: composes with the
// translation sending [0,0,0,1] to [t1,t2,t3,1], so the anchored map takes
// the canonical base point to the data-point's own stereometric position.
SolderingMap anchor_at(const SolderingMap& m,
                       const std::array<double, 3>& tangents);

GroupoidElement groupoid_pt(const SolderingMap& source,
                            const SolderingMap& target,
                            const std::string& source_id = "",
                            const std::string& target_id = "");

GroupoidElement compose(const GroupoidElement& second,
                        const GroupoidElement& first);

// 3x3 matrix sending the canonical RP^2 frame ([1:0:0], [0:1:0], [0:0:1],
// [1:1:1]) to the four targets. Throws SingularError when three targets are
// collinear.
FrameChange2 solve_frame_change_rp2(const std::array<ProjPoint2, 4>& targets);

// Coordinates of p in the frame defined by the four references.
ProjPoint2 normalize_rp2(const ProjPoint2& p,
                         const std::array<ProjPoint2, 4>& refs);

// Scale-free matrix comparison (unit max-norm, canonical sign).
double matrix_proj_distance(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b);

} // namespace rls::projective

#endif
