#ifndef RLS_GEOMETRY_HPP
#define RLS_GEOMETRY_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rls/errors.hpp"

// Flat-spacetime kernel: events, Minkowski products, causal classification,
// and null-cone solvers (light propagation to/from a worldline, cone
// intersection). Signature (+,-,-,...), c = 1. Component 0 is coordinate
// time.

namespace rls {

struct Worldline; // defined in constellation.hpp

struct Event {
    Eigen::VectorXd coords;

    Event() = default;
    explicit Event(Eigen::VectorXd c) : coords(std::move(c)) {}
    Event(std::initializer_list<double> c)
        : coords(Eigen::Map<const Eigen::VectorXd>(c.begin(),
                                                   (Eigen::Index)c.size())) {}

    int dim() const { return (int)coords.size(); }
    double t() const { return coords[0]; }
    Eigen::VectorXd spatial() const { return coords.tail(coords.size() - 1); }
};

enum class CausalClass { timelike, null_like, spacelike };

struct Interval {
    double value = 0.0;
    CausalClass causal_class = CausalClass::null_like;
};

// relative tolerance for calling an interval null
inline constexpr double kNullEps = 1e-9;

Interval minkowski(const Event& a, const Event& b);

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

// Which end of the light exchange lies on the worldline: with `emission` the
// worldline point emits and x receives (w(s) precedes x); with `reception`
// the worldline point receives light coming from x (w(s) follows x).
enum class ConeSense { emission, reception };

// Root of the null condition for a worldline given as a callable. Bracketed
// bisection first, then Newton polish on the parameter. Throws BracketError
// when the condition does not change sign over the bracket.
double solve_null_parameter(const std::function<Event(double)>& w,
                            const Event& x, Bracket bracket, ConeSense sense);

// s such that x lies on the future null cone of w(s) (w emits, x receives).
double solve_null_past(const Worldline& w, const Event& x, Bracket bracket);
// Same root as solve_null_past: the emission event whose light reaches x.
double solve_null_future(const Worldline& w, const Event& x, Bracket bracket);
// s such that w(s) lies on the future null cone of x (x emits, w receives).
double solve_null_reception(const Worldline& w, const Event& x,
                            Bracket bracket);

// The unique event null-separated from all d apexes and earlier than each
// (past cones) or later than each (future cones). Linearized
// pairwise-difference seed, then damped Newton on the d null conditions.
Event intersect_past_cones(const std::vector<Event>& apexes);
Event intersect_future_cones(const std::vector<Event>& apexes);

} // namespace rls

#endif
