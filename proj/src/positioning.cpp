#include "rls/positioning.hpp"

#include <cmath>

#include "rls/log.hpp"

namespace rls {

EmissionPosition emission_coordinates(const std::vector<Emitter>& emitters,
                                      const Event& x, Bracket bracket) {
    EmissionPosition p;
    p.stamps.resize((Eigen::Index)emitters.size());
    for (size_t i = 0; i < emitters.size(); ++i) {
        try {
            double s = solve_null_past(emitters[i].worldline, x, bracket);
            p.stamps[(Eigen::Index)i] = emitters[i].stamp(s);
        } catch (const Error& err) {
            throw BracketError("emission_coordinates: emitter " +
                               emitters[i].id + ": " + err.what());
        }
    }
    return p;
}

Event cartesian_of_emission(const std::vector<Emitter>& emitters,
                            const EmissionPosition& p, Bracket bracket) {
    if ((size_t)p.stamps.size() != emitters.size())
        throw DimensionError("cartesian_of_emission: stamp count mismatch");
    std::vector<Event> sources;
    sources.reserve(emitters.size());
    for (size_t i = 0; i < emitters.size(); ++i) {
        double s = emitters[i].unstamp(p.stamps[(Eigen::Index)i]);
        sources.push_back(emitters[i].worldline.eval(s));
    }
    Event e = intersect_future_cones(sources);
    EmissionPosition check = emission_coordinates(emitters, e, bracket);
    double err = (check.stamps - p.stamps).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, p.stamps.cwiseAbs().maxCoeff());
    if (err > 1e-10 * scale)
        throw ConvergenceError(
            "cartesian_of_emission: round trip failed, residual " +
            std::to_string(err));
    return e;
}

EmissionPosition grid_change(const std::vector<Emitter>& from,
                             const std::vector<Emitter>& to,
                             const EmissionPosition& p, Bracket bracket) {
    Event e = cartesian_of_emission(from, p, bracket);
    return emission_coordinates(to, e, bracket);
}

namespace {

// reception event of x's light on the emitter's worldline
Event reception_event(const Emitter& em, const Event& x, Bracket bracket) {
    double s = solve_null_reception(em.worldline, x, bracket);
    return em.worldline.eval(s);
}

// event on the emitter's worldline whose light arrives at x, plus its stamp
std::pair<Event, double> retarded_event(const Emitter& em, const Event& x,
                                        Bracket bracket) {
    double s = solve_null_past(em.worldline, x, bracket);
    return {em.worldline.eval(s), em.stamp(s)};
}

} // namespace

Echo3D assemble_echo_3d(const std::vector<Emitter>& main3,
                        const Emitter& fifth, const Event& e, Bracket bracket,
                        const std::string& signature) {
    if (main3.size() != 3)
        throw DimensionError("assemble_echo_3d: need exactly 3 emitters");
    Echo3D echo;
    echo.user_event = e;
    for (int i = 0; i < 3; ++i) {
        EchoRecord3D& rec = echo.records[(size_t)i];
        const Emitter& station = main3[(size_t)i];
        rec.emitter_id = station.id;
        rec.signature = signature;
        try {
            double s_station =
                solve_null_reception(station.worldline, e, bracket);
            rec.station_event = station.worldline.eval(s_station);
            rec.primary_stamp = station.stamp(s_station);
        } catch (const Error& err) {
            throw BracketError("assemble_echo_3d: user -> station " +
                               station.id + ": " + err.what());
        }
        const Emitter& first = main3[(size_t)((i + 1) % 3)];
        const Emitter& second = main3[(size_t)((i + 2) % 3)];
        auto fill = [&](const Emitter& src, Event& ev,
                        std::array<double, 3>& triple, const char* label) {
            try {
                ev = retarded_event(src, rec.station_event, bracket).first;
                EmissionPosition p =
                    emission_coordinates(main3, ev, bracket);
                triple = {p.stamps[0], p.stamps[1], p.stamps[2]};
            } catch (const Error& err) {
                throw BracketError("assemble_echo_3d: " + src.id + " -> " +
                                   station.id + " (" + label +
                                   "): " + err.what());
            }
        };
        fill(first, rec.first_event, rec.first_triple, "first");
        fill(second, rec.second_event, rec.second_triple, "second");
        try {
            auto [ev, stamp] =
                retarded_event(fifth, rec.station_event, bracket);
            rec.fifth_event = ev;
            rec.fifth_stamp = stamp;
        } catch (const Error& err) {
            throw BracketError("assemble_echo_3d: " + fifth.id + " -> " +
                               station.id + ": " + err.what());
        }
    }
    return echo;
}

Echo4D assemble_station_records_4d(const std::vector<Emitter>& main4,
                                   const Emitter& fifth, const Event& e,
                                   Bracket bracket,
                                   const Attribution4D& attribution,
                                   const std::string& signature) {
    if (main4.size() != 4)
        throw DimensionError(
            "assemble_station_records_4d: need exactly 4 emitters");
    Echo4D echo;
    echo.user_event = e;
    for (int i = 0; i < 4; ++i) {
        StationRecord4D& rec = echo.stations[(size_t)i];
        const Emitter& station = main4[(size_t)i];
        rec.station_id = station.id;
        rec.pair_first = attribution.pairs[(size_t)i][0];
        rec.pair_second = attribution.pairs[(size_t)i][1];
        rec.signature = signature;
        try {
            double s_station =
                solve_null_reception(station.worldline, e, bracket);
            rec.station_event = station.worldline.eval(s_station);
            rec.primary_stamp = station.stamp(s_station);
        } catch (const Error& err) {
            throw BracketError("assemble_station_records_4d: user -> " +
                               station.id + ": " + err.what());
        }
        for (int r = 0; r < 3; ++r) {
            const Emitter& src =
                main4[(size_t)attribution.refs[(size_t)i][(size_t)r]];
            try {
                Event ev = retarded_event(src, rec.station_event, bracket).first;
                rec.ref_events[(size_t)r] = ev;
                rec.ref_ids[(size_t)r] = src.id;
                EmissionPosition p = emission_coordinates(main4, ev, bracket);
                rec.ref_positions[(size_t)r] = p.stamps.head<4>();
            } catch (const Error& err) {
                throw BracketError("assemble_station_records_4d: " + src.id +
                                   " -> " + station.id + ": " + err.what());
            }
        }
        try {
            auto [ev, stamp] = retarded_event(fifth, rec.station_event, bracket);
            rec.fifth_event = ev;
            rec.fifth_stamp = stamp;
        } catch (const Error& err) {
            throw BracketError("assemble_station_records_4d: " + fifth.id +
                               " -> " + station.id + ": " + err.what());
        }
    }
    return echo;
}

DataPoint flatten(const Echo3D& echo, const std::string& event_id) {
    DataPoint d;
    d.event_id = event_id;
    for (const EchoRecord3D& rec : echo.records) {
        d.stamps.push_back(rec.primary_stamp);
        d.stamps.insert(d.stamps.end(), rec.first_triple.begin(),
                        rec.first_triple.end());
        d.stamps.insert(d.stamps.end(), rec.second_triple.begin(),
                        rec.second_triple.end());
        d.stamps.push_back(rec.fifth_stamp);
    }
    return d;
}

DataPoint flatten(const Echo4D& echo, const std::string& event_id) {
    DataPoint d;
    d.event_id = event_id;
    for (const StationRecord4D& rec : echo.stations) {
        d.stamps.push_back(rec.primary_stamp);
        for (const auto& p : rec.ref_positions)
            d.stamps.insert(d.stamps.end(), p.data(), p.data() + 4);
        d.stamps.push_back(rec.fifth_stamp);
    }
    return d;
}

} // namespace rls
