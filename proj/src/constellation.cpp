#include "rls/constellation.hpp"

#include <cmath>

namespace rls {

Worldline Worldline::make_inertial(Event start, Eigen::VectorXd velocity) {
    Worldline w;
    w.kind = Kind::inertial;
    w.start = std::move(start);
    w.velocity = std::move(velocity);
    w.validate();
    return w;
}

Worldline Worldline::make_static(Event position) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(position.dim() - 1);
    return make_inertial(std::move(position), std::move(v));
}

Worldline Worldline::make_circular(int dim, double t0, Eigen::VectorXd center,
                                   double radius, double rate, double phase) {
    Worldline w;
    w.kind = Kind::circular;
    Eigen::VectorXd s = Eigen::VectorXd::Zero(dim);
    s[0] = t0;
    w.start = Event(s);
    w.center = std::move(center);
    w.radius = radius;
    w.rate = rate;
    w.phase = phase;
    w.validate();
    return w;
}

Worldline Worldline::make_helical(double t0, Eigen::VectorXd center,
                                  double radius, double rate, double drift,
                                  double phase) {
    Worldline w;
    w.kind = Kind::helical;
    Eigen::VectorXd s = Eigen::VectorXd::Zero(4);
    s[0] = t0;
    w.start = Event(s);
    w.center = std::move(center);
    w.radius = radius;
    w.rate = rate;
    w.drift = drift;
    w.phase = phase;
    w.validate();
    return w;
}

int Worldline::dim() const { return start.dim(); }

Event Worldline::eval(double s) const {
    if (s < s_min || s > s_max)
        throw DomainError("worldline parameter out of domain");
    const int d = dim();
    Eigen::VectorXd c(d);
    c[0] = start.t() + s;
    switch (kind) {
    case Kind::inertial:
        c.tail(d - 1) = start.spatial() + s * velocity;
        break;
    case Kind::circular:
    case Kind::helical: {
        double a = rate * s + phase;
        c.tail(d - 1) = center;
        c[1] += radius * std::cos(a);
        c[2] += radius * std::sin(a);
        if (kind == Kind::helical) c[3] += drift * s;
        break;
    }
    }
    return Event(c);
}

Eigen::VectorXd Worldline::tangent(double s) const {
    const int d = dim();
    Eigen::VectorXd t = Eigen::VectorXd::Zero(d);
    t[0] = 1.0;
    switch (kind) {
    case Kind::inertial:
        t.tail(d - 1) = velocity;
        break;
    case Kind::circular:
    case Kind::helical: {
        double a = rate * s + phase;
        t[1] = -radius * rate * std::sin(a);
        t[2] = radius * rate * std::cos(a);
        if (kind == Kind::helical) t[3] = drift;
        break;
    }
    }
    return t;
}

double Worldline::speed() const {
    switch (kind) {
    case Kind::inertial:
        return velocity.norm();
    case Kind::circular:
        return std::abs(radius * rate);
    case Kind::helical:
        return std::hypot(radius * rate, drift);
    }
    return 0.0;
}

double Worldline::proper_rate() const {
    double v = speed();
    return std::sqrt(1.0 - v * v);
}

void Worldline::validate() const {
    if (dim() < 2 || dim() > 4)
        throw ConfigError("worldline: spacetime dimension must be 2, 3 or 4");
    if (kind == Kind::inertial && velocity.size() != dim() - 1)
        throw ConfigError("worldline: velocity length must be dimension - 1");
    if (kind != Kind::inertial) {
        if (dim() < 3)
            throw ConfigError("worldline: circular motion needs dimension >= 3");
        if (center.size() != dim() - 1)
            throw ConfigError("worldline: center length must be dimension - 1");
    }
    if (kind == Kind::helical && dim() != 4)
        throw ConfigError("worldline: helical motion needs dimension 4");
    if (speed() >= 1.0)
        throw ConfigError("worldline: coordinate speed must stay below 1");
    if (!(s_min < s_max)) throw ConfigError("worldline: empty domain");
}

double Clock::map(double tau) const {
    switch (kind) {
    case Kind::proper_time:
        return tau + offset;
    case Kind::affine:
        return rate * tau + offset;
    case Kind::monotone:
        return tau + amp * std::sin(freq * tau);
    }
    return tau;
}

double Clock::invert(double stamp) const {
    switch (kind) {
    case Kind::proper_time:
        return stamp - offset;
    case Kind::affine:
        return (stamp - offset) / rate;
    case Kind::monotone: {
        // Newton on tau + amp sin(freq tau) = stamp; slope >= 1 - |amp freq| > 0
        double tau = stamp;
        for (int it = 0; it < 100; ++it) {
            double f = tau + amp * std::sin(freq * tau) - stamp;
            if (std::abs(f) <= 1e-13 * std::max(1.0, std::abs(stamp)))
                return tau;
            double slope = 1.0 + amp * freq * std::cos(freq * tau);
            tau -= f / slope;
        }
        throw ConvergenceError("clock: stamp inversion did not converge");
    }
    }
    return stamp;
}

void Clock::validate() const {
    if (kind == Kind::affine && !(rate > 0.0))
        throw ConfigError("clock: affine rate must be positive");
    if (kind == Kind::monotone && !(std::abs(amp * freq) < 1.0))
        throw ConfigError("clock: |amp * freq| must stay below 1");
}

double Emitter::stamp(double s) const {
    return clock.map(worldline.proper_rate() * s);
}

double Emitter::unstamp(double tau) const {
    return clock.invert(tau) / worldline.proper_rate();
}

Event AnchoringWorldline::eval(double s) const {
    if (s >= origin_parameter) return emitter.worldline.eval(s);
    // inertial prolongation with the velocity at the origin event
    Event o = origin();
    Eigen::VectorXd t = emitter.worldline.tangent(origin_parameter);
    return Event(o.coords + (s - origin_parameter) * t);
}

double message_coordinate(const AnchoringWorldline& a, const Event& e,
                          Bracket bracket) {
    double s = solve_null_parameter([&](double u) { return a.eval(u); }, e,
                                    bracket, ConeSense::emission);
    return a.stamp(s);
}

} // namespace rls
