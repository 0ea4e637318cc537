#ifndef RLS_LOCALIZATION_HPP
#define RLS_LOCALIZATION_HPP

#include <array>

#include "rls/positioning.hpp"
#include "rls/projective.hpp"

// End-to-end localization protocols: the 1+1 grid identity, the
// three-emitter plane-intersection and intrinsic (projective) procedures,
// the four-emitter protocol with its consistency constraints, and the
// embedding with the fifth (anchor) coordinate.

namespace rls {

struct StereoPosition {
    Eigen::VectorXd stamps; // (tau, tau~, tau^) or (tau, tau-, tau~, tau^)
    double anchor = 0.0;    // fifth coordinate
    bool has_anchor = false;
    Eigen::VectorXd constraint_residuals; // pairwise-match residuals (4D)
    bool within_tolerance = true;
};

// 1+1 case: the two reception records carry e's null coordinates unchanged
// along each ray; the position in the emission grid is read off directly.
EmissionPosition localize_2d(const EmissionPosition& e1,
                             const EmissionPosition& e2);

// Circumcenter of the triangle {u, u + r1, u + r2} in the grid.
Eigen::Vector3d circumcenter(const Eigen::Vector3d& u,
                             const Eigen::Vector3d& r1,
                             const Eigen::Vector3d& r2);

// One station's data for the plane-intersection procedure, all expressed as
// 3-positions in the emission grid.
struct PlaneStationInput {
    Eigen::Vector3d apex;     // station's own 3-position
    Eigen::Vector3d p_first;  // first reference 3-position
    Eigen::Vector3d p_second; // second reference 3-position
    Eigen::Vector3d p_user;   // user's 3-position (circumcircle origin)
    double tan_alpha = 0.0;   // measured plane angle
};

struct PlaneSolution3D {
    std::array<Eigen::Vector3d, 3> circumcenters;
    std::array<Eigen::Vector3d, 3> v_plus;
    std::array<Eigen::Vector3d, 3> v_minus;
    Eigen::Matrix<double, 6, 1> coefficients; // per-station plane coefficients
    Eigen::Vector3d recovered;                // event 3-position in the grid
    double residual = 0.0;                    // mismatch of the three planes
};

// Intersects the three station planes: six linear equations for the six
// plane coefficients, event = apex + a+ v+ + a- v-.
PlaneSolution3D localize_3d_planes(const std::array<PlaneStationInput, 3>& in);

// The angle that puts `target` on a station's plane (used to feed the plane
// procedure from known geometry).
double plane_angle_oracle(const PlaneStationInput& station,
                          const Eigen::Vector3d& target);

// One station's data for the intrinsic procedure: the three stamps attached
// to the projective references [0], [inf], [1] and the normalized reading of
// e's bright point.
struct IntrinsicStation {
    double target_zero = 0.0; // first-neighbor stamp
    double target_inf = 0.0;  // second-neighbor stamp
    double target_one = 0.0;  // localizing satellite's stamp
    projective::ProjPoint1 reading;
};

StereoPosition localize_3d_intrinsic(const std::array<IntrinsicStation, 3>& in);
StereoPosition localize_3d_intrinsic(const std::array<IntrinsicStation, 3>& in,
                                     double anchor);

// Builds the three intrinsic stations from an echo bundle: station i uses
// component i of its two neighbor triples and its localizing-satellite
// stamp.
std::array<IntrinsicStation, 3> intrinsic_stations(
    const Echo3D& echo, const std::array<projective::ProjPoint1, 3>& readings);

// One station's data for the four-emitter protocol: the station's stamp-pair
// components of the three reference 4-positions, the localizing satellite's
// stamp (which also fixes the free parameter of the station's linear
// system), and the normalized RP^2 reading of e.
struct Station4DInput {
    Eigen::Vector2d a; // pair components of the [inf,0] reference position
    Eigen::Vector2d b; // [0,inf]
    Eigen::Vector2d c; // [0,0]
    double fifth_stamp = 0.0;
    double tan_alpha = 0.0; // normalized reading, first chart coordinate
    double tan_beta = 0.0;  // second chart coordinate
};

// Per-station output pair (the two coordinates the station is responsible
// for), solved from the station's 2x2 system and fractional forms.
std::array<double, 2> localize_station_4d(const Station4DInput& in);

// Full four-station protocol: assembles the 4-position from the designated
// station outputs and reports the four pairwise-consistency residuals.
StereoPosition localize_4d(const std::array<Station4DInput, 4>& in,
                           double anchor, double tolerance = 1e-8);

std::array<Station4DInput, 4> stations_4d(
    const Echo4D& echo, const std::array<projective::ProjPoint2, 4>& readings);

// Concatenates stereometric stamps with the anchor coordinate (length 4 in
// the three-emitter case, 5 in the four-emitter case).
Eigen::VectorXd embed_event(const StereoPosition& p);

} // namespace rls

#endif
