#include "rls/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "rls/constellation.hpp"
#include "rls/log.hpp"

namespace rls {

namespace {

double quad_form(const Eigen::VectorXd& v) {
    return v[0] * v[0] - v.tail(v.size() - 1).squaredNorm();
}

double quad_polar(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return a[0] * b[0] - a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

} // namespace

Interval minkowski(const Event& a, const Event& b) {
    if (a.dim() != b.dim())
        throw DimensionError("minkowski: events of dimension " +
                             std::to_string(a.dim()) + " and " +
                             std::to_string(b.dim()));
    Eigen::VectorXd d = a.coords - b.coords;
    Interval out;
    out.value = quad_form(d);
    double scale = std::max(a.coords.cwiseAbs().maxCoeff(),
                            b.coords.cwiseAbs().maxCoeff());
    double eps = kNullEps * std::max(1.0, scale * scale);
    if (std::abs(out.value) <= eps)
        out.causal_class = CausalClass::null_like;
    else if (out.value > 0.0)
        out.causal_class = CausalClass::timelike;
    else
        out.causal_class = CausalClass::spacelike;
    return out;
}

double solve_null_parameter(const std::function<Event(double)>& w,
                            const Event& x, Bracket bracket, ConeSense sense) {
    if (!(bracket.lo < bracket.hi))
        throw BracketError("solve_null_parameter: empty bracket");
    // g is strictly monotone for timelike worldlines: decreasing for the
    // emission sense, increasing for reception.
    auto g = [&](double s) {
        Event p = w(s);
        if (p.dim() != x.dim())
            throw DimensionError("solve_null_parameter: dimension mismatch");
        double dist = (x.spatial() - p.spatial()).norm();
        if (sense == ConeSense::emission) return (x.t() - p.t()) - dist;
        return (p.t() - x.t()) - dist;
    };
    double lo = bracket.lo, hi = bracket.hi;
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if (glo * ghi > 0.0)
        throw BracketError("solve_null_parameter: no sign change in bracket");
    // bisect to 1e-6, then Newton with finite-difference slope
    while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm == 0.0) return mid;
        if (gm * glo > 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    double s = 0.5 * (lo + hi);
    double scale = std::max({1.0, std::abs(x.t()), std::abs(s)});
    double target = 1e-13 * scale;
    for (int it = 0; it < 60; ++it) {
        double gs = g(s);
        if (std::abs(gs) <= target) return s;
        double h = 1e-7 * (1.0 + std::abs(s));
        double slope = (g(s + h) - g(s - h)) / (2.0 * h);
        if (slope == 0.0) break;
        double step = gs / slope;
        // keep the iterate inside the bisection bracket
        double next = s - step;
        if (next < bracket.lo || next > bracket.hi) next = 0.5 * (lo + hi);
        s = next;
    }
    if (std::abs(g(s)) <= 1e-10 * scale) return s;
    throw ConvergenceError("solve_null_parameter: polish did not converge");
}

double solve_null_past(const Worldline& w, const Event& x, Bracket bracket) {
    return solve_null_parameter([&](double s) { return w.eval(s); }, x,
                                bracket, ConeSense::emission);
}

double solve_null_future(const Worldline& w, const Event& x, Bracket bracket) {
    return solve_null_parameter([&](double s) { return w.eval(s); }, x,
                                bracket, ConeSense::emission);
}

double solve_null_reception(const Worldline& w, const Event& x,
                            Bracket bracket) {
    return solve_null_parameter([&](double s) { return w.eval(s); }, x,
                                bracket, ConeSense::reception);
}

namespace {

Event intersect_cones(const std::vector<Event>& apexes, bool past) {
    const int d = (int)apexes.size();
    if (d < 2) throw DimensionError("intersect_cones: need at least 2 apexes");
    for (const Event& a : apexes)
        if (a.dim() != d)
            throw DimensionError("intersect_cones: " + std::to_string(d) +
                                 " apexes require dimension " +
                                 std::to_string(d));
    double scale = 1.0;
    for (const Event& a : apexes)
        scale = std::max(scale, a.coords.cwiseAbs().maxCoeff());

    // Pairwise differences of the null conditions are linear in e; the
    // remaining quadratic picks the branch.
    const Eigen::VectorXd& am = apexes[d - 1].coords;
    Eigen::MatrixXd lin(d - 1, d);
    Eigen::VectorXd rhs(d - 1);
    for (int i = 0; i < d - 1; ++i) {
        const Eigen::VectorXd& ai = apexes[i].coords;
        lin(i, 0) = -2.0 * (ai[0] - am[0]);
        lin.row(i).tail(d - 1) = 2.0 * (ai.tail(d - 1) - am.tail(d - 1));
        rhs[i] = (ai.tail(d - 1).squaredNorm() - ai[0] * ai[0]) -
                 (am.tail(d - 1).squaredNorm() - am[0] * am[0]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lin);
    lu.setThreshold(1e-10);
    if (lu.rank() < d - 1)
        throw SingularError("intersect_cones: degenerate apex configuration");
    Eigen::VectorXd particular = lu.solve(rhs);
    Eigen::MatrixXd null_space = lu.kernel();
    if (null_space.cols() != 1)
        throw SingularError("intersect_cones: solution line is not unique");
    Eigen::VectorXd n = null_space.col(0);

    Eigen::VectorXd delta = particular - am;
    double c2 = quad_form(n);
    double c1 = 2.0 * quad_polar(delta, n);
    double c0 = quad_form(delta);
    std::vector<double> roots;
    if (std::abs(c2) < 1e-14 * std::max(1.0, n.squaredNorm())) {
        if (c1 != 0.0) roots.push_back(-c0 / c1);
    } else {
        double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc < 0.0) {
            if (disc > -1e-9 * std::max(1.0, c1 * c1)) disc = 0.0;
            else
                throw ConvergenceError(
                    "intersect_cones: no real cone intersection");
        }
        double sq = std::sqrt(disc);
        roots.push_back((-c1 + sq) / (2.0 * c2));
        roots.push_back((-c1 - sq) / (2.0 * c2));
    }
    // pick the branch on the requested side of every apex
    Eigen::VectorXd best;
    bool found = false;
    for (double t : roots) {
        Eigen::VectorXd e = particular + t * n;
        bool ok = true;
        for (const Event& a : apexes) {
            double dt = a.coords[0] - e[0];
            if (past ? dt < -1e-9 * scale : dt > 1e-9 * scale) ok = false;
        }
        if (ok) {
            best = e;
            found = true;
            break;
        }
    }
    if (!found)
        throw ConvergenceError(past
                                   ? "intersect_cones: no common past branch"
                                   : "intersect_cones: no common future branch");

    // damped Newton on the d null conditions
    Eigen::VectorXd e = best;
    double target = 1e-11 * std::max(1.0, scale * scale);
    auto residual = [&](const Eigen::VectorXd& p) {
        Eigen::VectorXd f(d);
        for (int i = 0; i < d; ++i) f[i] = quad_form(p - apexes[i].coords);
        return f;
    };
    Eigen::VectorXd f = residual(e);
    for (int it = 0; it < 100 && f.cwiseAbs().maxCoeff() > target; ++it) {
        Eigen::MatrixXd jac(d, d);
        for (int i = 0; i < d; ++i) {
            Eigen::VectorXd diff = e - apexes[i].coords;
            jac(i, 0) = 2.0 * diff[0];
            jac.row(i).tail(d - 1) = -2.0 * diff.tail(d - 1);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> jlu(jac);
        jlu.setThreshold(1e-12);
        if (jlu.rank() < d)
            throw SingularError("intersect_cones: singular Jacobian");
        Eigen::VectorXd step = jlu.solve(f);
        double lambda = 1.0;
        double f0 = f.norm();
        for (int half = 0; half < 30; ++half) {
            Eigen::VectorXd trial = e - lambda * step;
            Eigen::VectorXd ft = residual(trial);
            if (ft.norm() < f0) {
                e = trial;
                f = ft;
                break;
            }
            lambda *= 0.5;
            if (half == 29)
                throw ConvergenceError("intersect_cones: stalled Newton");
        }
    }
    if (f.cwiseAbs().maxCoeff() > target)
        throw ConvergenceError("intersect_cones: residual above tolerance");
    return Event(e);
}

} // namespace

Event intersect_past_cones(const std::vector<Event>& apexes) {
    return intersect_cones(apexes, true);
}

Event intersect_future_cones(const std::vector<Event>& apexes) {
    return intersect_cones(apexes, false);
}

} // namespace rls
