#ifndef RLS_OBSERVATION_HPP
#define RLS_OBSERVATION_HPP

#include <array>
#include <vector>

#include "rls/constellation.hpp"
#include "rls/projective.hpp"

// Celestial circle/sphere model at a reception event: local orthonormal
// frames, incoming-ray directions, gnomonic charts with the two-hemisphere
// atlas, and projective normalization of raw readings against bright
// points.

namespace rls {

// Minkowski-orthonormal frame at a worldline point. Column 0 is the
// normalized timelike tangent; columns 1..d-1 are spacelike.
struct Tetrad {
    Event base;
    Eigen::MatrixXd legs;

    int dim() const { return (int)legs.rows(); }
};

// Unit spatial direction (length d-1) of an incoming past-pointing null
// ray, expressed in the tetrad, pointing toward the source.
struct Direction {
    Eigen::VectorXd u;
};

Tetrad tetrad_at(const Emitter& e, double s,
                 const Eigen::MatrixXd& spatial_seed);
// seed = coordinate axes
Tetrad tetrad_at(const Emitter& e, double s);

Direction incoming_direction(const Tetrad& t, const Event& source);

enum class Hemisphere { north, south, polar_circle };

// Raw compass output: gnomonic chart coordinates on the tagged hemisphere,
// or the polar-circle tag alone, plus the signed polar-circle crossing
// count of a tracked bright point.
struct HemisphereReading {
    Hemisphere tag = Hemisphere::north;
    Eigen::VectorXd chart; // (tan alpha) for d=3, (tan alpha, tan beta) for d=4
    int passage_signature = 0;
};

HemisphereReading chart_reading(const Direction& dir);

// Signed alternating crossing count along a sampled bright-point trajectory.
int passage_signature(const std::vector<Direction>& trajectory);

// Homogeneous chart point of a direction: [u2 : u1] on the celestial circle,
// [u1 : u2 : u3] on the celestial sphere. Scale-free, so hemisphere and
// pole cases need no special-casing downstream.
projective::ProjPoint1 homogeneous_reading_rp1(const Direction& dir);
projective::ProjPoint2 homogeneous_reading_rp2(const Direction& dir);

// Projective coordinate of e's bright point in the frame built from three
// reference bright points (refs -> [0:1], [1:0], [1:1]).
projective::ProjPoint1 normalize_reading_rp1(
    const Direction& e_dir, const std::array<Direction, 3>& refs);

// Coordinates in the RP^2 frame sending the four references to [1:0:0],
// [0:1:0], [0:0:1], [1:1:1].
projective::ProjPoint2 normalize_reading_rp2(
    const Direction& e_dir, const std::array<Direction, 4>& refs);

} // namespace rls

#endif
