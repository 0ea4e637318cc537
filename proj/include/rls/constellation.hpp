#ifndef RLS_CONSTELLATION_HPP
#define RLS_CONSTELLATION_HPP

#include <string>
#include <vector>

#include "rls/geometry.hpp"

// Emitter worldlines, broadcast clocks (stamp generators), emitter
// identities, and the anchoring worldline with its past prolongation and
// message function.

namespace rls {

// Timelike parameterized curve. The parameter is a coordinate-time offset:
// w(s)^0 = t0 + s, so evaluation is trivially monotone in coordinate time
// and the coordinate speed is constant for every kind (proper-time rate is
// a constant per worldline).
struct Worldline {
    enum class Kind { inertial, circular, helical };

    Kind kind = Kind::inertial;
    Event start;              // event at s = 0 (inertial); time/center anchor otherwise
    Eigen::VectorXd velocity; // inertial: spatial velocity, |v| < 1
    Eigen::VectorXd center;   // circular/helical: spatial center at s = 0
    double radius = 0.0;      // circular/helical
    double rate = 0.0;        // angular rate; |radius*rate| < 1
    double phase = 0.0;
    double drift = 0.0;       // helical: velocity along the third spatial axis
    double s_min = -1e9;
    double s_max = 1e9;

    static Worldline make_inertial(Event start, Eigen::VectorXd velocity);
    static Worldline make_static(Event position); // zero-velocity inertial
    static Worldline make_circular(int dim, double t0, Eigen::VectorXd center,
                                   double radius, double rate,
                                   double phase = 0.0);
    static Worldline make_helical(double t0, Eigen::VectorXd center,
                                  double radius, double rate, double drift,
                                  double phase = 0.0);

    int dim() const;
    Event eval(double s) const;
    Eigen::VectorXd tangent(double s) const; // d(coords)/ds
    double speed() const;                    // constant |dx/dt|
    double proper_rate() const;              // dtau/ds = sqrt(1 - speed^2)
    void validate() const;                   // timelike + domain checks
};

// Monotone map from proper time along the worldline to broadcast stamp.
struct Clock {
    enum class Kind { proper_time, affine, monotone };

    Kind kind = Kind::proper_time;
    double rate = 1.0;   // affine: stamp = rate * tau + offset, rate > 0
    double offset = 0.0; // affine/proper_time offset
    double amp = 0.0;    // monotone: stamp = tau + amp * sin(freq * tau)
    double freq = 1.0;   // requires |amp * freq| < 1

    double map(double tau) const;
    double invert(double stamp) const; // Newton for the monotone family
    void validate() const;
};

struct Emitter {
    std::string id;
    Worldline worldline;
    Clock clock;

    // broadcast stamp at worldline parameter s, and its inverse
    double stamp(double s) const;
    double unstamp(double tau) const;
};

// The localizing satellite's worldline: stamps begin at the event o
// (parameter origin_parameter); probe events causally earlier than o are
// served by an inertial prolongation with the velocity at o.
struct AnchoringWorldline {
    Emitter emitter;
    double origin_parameter = 0.0;

    Event origin() const { return emitter.worldline.eval(origin_parameter); }
    // piecewise evaluation: main worldline for s >= origin, prolongation below
    Event eval(double s) const;
    double stamp(double s) const { return emitter.stamp(s); }
};

// The fifth coordinate of an event: the stamp of the unique worldline point
// whose future null cone carries e (emission sense). Uses the prolongation
// when the root precedes the origin o.
double message_coordinate(const AnchoringWorldline& a, const Event& e,
                          Bracket bracket);

} // namespace rls

#endif
