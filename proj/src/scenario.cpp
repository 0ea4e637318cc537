#include "rls/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "rls/log.hpp"
#include "rls/observation.hpp"

namespace rls {

using nlohmann::json;

namespace {

Eigen::VectorXd parse_vector(const json& j, const std::string& path,
                             int expected = -1) {
    if (!j.is_array())
        throw ConfigError(path + ": expected an array of numbers");
    Eigen::VectorXd v((Eigen::Index)j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw ConfigError(path + "[" + std::to_string(i) +
                              "]: expected a number");
        v[(Eigen::Index)i] = j[i].get<double>();
    }
    if (expected >= 0 && v.size() != expected)
        throw ConfigError(path + ": expected length " +
                          std::to_string(expected) + ", got " +
                          std::to_string(v.size()));
    return v;
}

Worldline parse_worldline(const json& j, int dim, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path + ": expected an object");
    std::string kind = j.value("kind", "static");
    Worldline w;
    try {
        if (kind == "static") {
            Eigen::VectorXd pos =
                parse_vector(j.at("position"), path + ".position", dim - 1);
            Eigen::VectorXd c(dim);
            c[0] = j.value("t0", 0.0);
            c.tail(dim - 1) = pos;
            w = Worldline::make_static(Event(c));
        } else if (kind == "inertial") {
            Eigen::VectorXd start =
                parse_vector(j.at("start"), path + ".start", dim);
            Eigen::VectorXd vel =
                parse_vector(j.at("velocity"), path + ".velocity", dim - 1);
            w = Worldline::make_inertial(Event(start), vel);
        } else if (kind == "circular") {
            Eigen::VectorXd center =
                parse_vector(j.at("center"), path + ".center", dim - 1);
            w = Worldline::make_circular(dim, j.value("t0", 0.0), center,
                                         j.at("radius").get<double>(),
                                         j.at("rate").get<double>(),
                                         j.value("phase", 0.0));
        } else if (kind == "helical") {
            Eigen::VectorXd center =
                parse_vector(j.at("center"), path + ".center", dim - 1);
            w = Worldline::make_helical(j.value("t0", 0.0), center,
                                        j.at("radius").get<double>(),
                                        j.at("rate").get<double>(),
                                        j.at("drift").get<double>(),
                                        j.value("phase", 0.0));
        } else {
            throw ConfigError(path + ".kind: unknown worldline kind '" + kind +
                              "'");
        }
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return w;
}

Clock parse_clock(const json& j, const std::string& path) {
    Clock c;
    if (j.is_null()) return c;
    if (!j.is_object()) throw ConfigError(path + ": expected an object");
    std::string kind = j.value("kind", "proper_time");
    if (kind == "proper_time") {
        c.kind = Clock::Kind::proper_time;
        c.offset = j.value("offset", 0.0);
    } else if (kind == "affine") {
        c.kind = Clock::Kind::affine;
        c.rate = j.value("rate", 1.0);
        c.offset = j.value("offset", 0.0);
    } else if (kind == "monotone") {
        c.kind = Clock::Kind::monotone;
        c.amp = j.value("amp", 0.0);
        c.freq = j.value("freq", 1.0);
    } else {
        throw ConfigError(path + ".kind: unknown clock kind '" + kind + "'");
    }
    c.validate();
    return c;
}

Emitter parse_emitter(const json& j, int dim, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path + ": expected an object");
    Emitter e;
    e.id = j.value("id", "");
    if (e.id.empty()) throw ConfigError(path + ".id: missing identifier");
    e.worldline = parse_worldline(j.at("worldline"), dim, path + ".worldline");
    e.clock = parse_clock(j.contains("clock") ? j.at("clock") : json(),
                          path + ".clock");
    return e;
}

json dump_worldline(const Worldline& w) {
    json j;
    switch (w.kind) {
    case Worldline::Kind::inertial:
        if (w.velocity.isZero()) {
            j["kind"] = "static";
            j["t0"] = w.start.t();
            j["position"] = std::vector<double>(
                w.start.coords.data() + 1, w.start.coords.data() + w.dim());
        } else {
            j["kind"] = "inertial";
            j["start"] = std::vector<double>(w.start.coords.data(),
                                             w.start.coords.data() + w.dim());
            j["velocity"] = std::vector<double>(
                w.velocity.data(), w.velocity.data() + w.velocity.size());
        }
        break;
    case Worldline::Kind::circular:
    case Worldline::Kind::helical:
        j["kind"] = w.kind == Worldline::Kind::circular ? "circular" : "helical";
        j["t0"] = w.start.t();
        j["center"] = std::vector<double>(w.center.data(),
                                          w.center.data() + w.center.size());
        j["radius"] = w.radius;
        j["rate"] = w.rate;
        j["phase"] = w.phase;
        if (w.kind == Worldline::Kind::helical) j["drift"] = w.drift;
        break;
    }
    return j;
}

json dump_clock(const Clock& c) {
    json j;
    switch (c.kind) {
    case Clock::Kind::proper_time:
        j["kind"] = "proper_time";
        j["offset"] = c.offset;
        break;
    case Clock::Kind::affine:
        j["kind"] = "affine";
        j["rate"] = c.rate;
        j["offset"] = c.offset;
        break;
    case Clock::Kind::monotone:
        j["kind"] = "monotone";
        j["amp"] = c.amp;
        j["freq"] = c.freq;
        break;
    }
    return j;
}

} // namespace

ScenarioConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    ScenarioConfig c;
    c.schema_version = j.value("schema_version", 1);
    if (c.schema_version != 1)
        throw ConfigError("config.schema_version: unsupported version");
    c.dimension = j.value("dimension", 0);
    if (c.dimension < 2 || c.dimension > 4)
        throw ConfigError("config.dimension: must be 2, 3 or 4");
    if (!j.contains("emitters") || !j.at("emitters").is_array())
        throw ConfigError("config.emitters: expected an array");
    const json& ems = j.at("emitters");
    for (size_t i = 0; i < ems.size(); ++i)
        c.emitters.push_back(parse_emitter(
            ems[i], c.dimension, "config.emitters[" + std::to_string(i) + "]"));
    if ((int)c.emitters.size() != c.dimension)
        throw ConfigError(
            "config.emitters: dimension " + std::to_string(c.dimension) +
            " needs exactly " + std::to_string(c.dimension) +
            " main emitters, got " + std::to_string(c.emitters.size()));
    if (c.dimension >= 3) {
        if (!j.contains("anchor"))
            throw ConfigError(
                "config.anchor: the localizing (anchoring) emitter is "
                "required for dimension >= 3");
        AnchoringWorldline a;
        a.emitter = parse_emitter(j.at("anchor"), c.dimension, "config.anchor");
        a.origin_parameter = j.at("anchor").value("origin_parameter", -1e6);
        c.anchor = a;
    } else if (j.contains("anchor")) {
        throw ConfigError("config.anchor: not used in dimension 2");
    }
    if (j.contains("events")) {
        const json& ev = j.at("events");
        if (ev.contains("explicit")) {
            for (size_t i = 0; i < ev.at("explicit").size(); ++i)
                c.events.explicit_events.push_back(Event(parse_vector(
                    ev.at("explicit")[i],
                    "config.events.explicit[" + std::to_string(i) + "]",
                    c.dimension)));
        }
        c.events.random_count = ev.value("random_count", 0);
        if (c.events.random_count < 0)
            throw ConfigError("config.events.random_count: must be >= 0");
        if (ev.contains("center"))
            c.events.center =
                parse_vector(ev.at("center"), "config.events.center",
                             c.dimension - 1);
        else
            c.events.center = Eigen::VectorXd::Zero(c.dimension - 1);
        c.events.radius = ev.value("radius", 1.0);
        c.events.time_center = ev.value("time_center", 0.0);
        c.events.time_radius = ev.value("time_radius", 1.0);
        if (c.events.radius <= 0.0 || c.events.time_radius <= 0.0)
            throw ConfigError("config.events: radii must be positive");
    } else {
        c.events.center = Eigen::VectorXd::Zero(c.dimension - 1);
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            throw ConfigError("config.seed: must be a non-negative integer");
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("bracket")) {
        Eigen::VectorXd b = parse_vector(j.at("bracket"), "config.bracket", 2);
        c.bracket = {b[0], b[1]};
        if (!(c.bracket.lo < c.bracket.hi))
            throw ConfigError("config.bracket: lower bound must be below upper");
    }
    c.tolerance = j.value("tolerance", 1e-8);
    if (!(c.tolerance > 0.0))
        throw ConfigError("config.tolerance: must be positive");
    if (j.contains("stamp_pairs")) {
        const json& sp = j.at("stamp_pairs");
        if (!sp.is_array() || sp.size() != 4)
            throw ConfigError("config.stamp_pairs: expected 4 index pairs");
        for (size_t i = 0; i < 4; ++i) {
            Eigen::VectorXd p = parse_vector(
                sp[i], "config.stamp_pairs[" + std::to_string(i) + "]", 2);
            for (int k = 0; k < 2; ++k) {
                int idx = (int)p[k];
                if (idx < 0 || idx > 3)
                    throw ConfigError("config.stamp_pairs: indices in 0..3");
                c.attribution.pairs[i][(size_t)k] = idx;
            }
        }
    }
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string canonical_dump(const ScenarioConfig& config) {
    json j;
    j["schema_version"] = config.schema_version;
    j["dimension"] = config.dimension;
    j["emitters"] = json::array();
    for (const Emitter& e : config.emitters) {
        json je;
        je["id"] = e.id;
        je["worldline"] = dump_worldline(e.worldline);
        je["clock"] = dump_clock(e.clock);
        j["emitters"].push_back(je);
    }
    if (config.anchor) {
        json ja;
        ja["id"] = config.anchor->emitter.id;
        ja["worldline"] = dump_worldline(config.anchor->emitter.worldline);
        ja["clock"] = dump_clock(config.anchor->emitter.clock);
        ja["origin_parameter"] = config.anchor->origin_parameter;
        j["anchor"] = ja;
    }
    json ev;
    ev["explicit"] = json::array();
    for (const Event& e : config.events.explicit_events)
        ev["explicit"].push_back(std::vector<double>(
            e.coords.data(), e.coords.data() + e.coords.size()));
    ev["random_count"] = config.events.random_count;
    ev["center"] = std::vector<double>(
        config.events.center.data(),
        config.events.center.data() + config.events.center.size());
    ev["radius"] = config.events.radius;
    ev["time_center"] = config.events.time_center;
    ev["time_radius"] = config.events.time_radius;
    j["events"] = ev;
    j["seed"] = config.seed;
    j["bracket"] = {config.bracket.lo, config.bracket.hi};
    j["tolerance"] = config.tolerance;
    j["stamp_pairs"] = json::array();
    for (const auto& p : config.attribution.pairs)
        j["stamp_pairs"].push_back({p[0], p[1]});
    return j.dump();
}

std::uint64_t scenario_hash(const ScenarioConfig& config) {
    // FNV-1a over the canonical dump
    std::string dump = canonical_dump(config);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

double uniform_from_bits(std::uint64_t bits, double lo, double hi) {
    // top 53 bits -> [0,1) with an explicit mapping, identical on every
    // IEEE-754 platform
    double unit = (double)(bits >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

std::vector<Event> seeded_events(const ScenarioConfig& config) {
    std::vector<Event> out = config.events.explicit_events;
    std::mt19937_64 rng(config.seed);
    for (int i = 0; i < config.events.random_count; ++i) {
        Eigen::VectorXd c(config.dimension);
        c[0] = uniform_from_bits(rng(),
                                 config.events.time_center -
                                     config.events.time_radius,
                                 config.events.time_center +
                                     config.events.time_radius);
        for (int k = 1; k < config.dimension; ++k)
            c[k] = uniform_from_bits(
                rng(), config.events.center[k - 1] - config.events.radius,
                config.events.center[k - 1] + config.events.radius);
        out.push_back(Event(c));
    }
    return out;
}

bool LocalizationReport::all_ok() const {
    for (const ReportRow& r : rows)
        if (!r.error.empty()) return false;
    return true;
}

namespace {

// worldline parameter of an event known to lie on the worldline (the
// parameter is a coordinate-time offset for every kind)
double parameter_of(const Worldline& w, const Event& on_worldline) {
    return on_worldline.t() - w.start.t();
}

// Independent reading oracle on the celestial circle: the projective
// coordinate as a four-angle sine ratio instead of a Moebius solve.
double sine_reading_oracle(const Tetrad& tet, const Event& e_src,
                           const Event& zero_src, const Event& inf_src,
                           const Event& one_src) {
    auto angle = [&](const Event& src) {
        Direction d = incoming_direction(tet, src);
        return std::atan2(d.u[1], d.u[0]);
    };
    double te = angle(e_src), t0 = angle(zero_src), ti = angle(inf_src),
           t1 = angle(one_src);
    return (std::sin(te - t0) * std::sin(t1 - ti)) /
           (std::sin(te - ti) * std::sin(t1 - t0));
}

// Independent 4D station oracle: raw spatial-displacement chart and a
// column-scaled frame solve, mirroring nothing of the tetrad pipeline.
std::array<double, 2> station_oracle_4d(const StationRecord4D& rec,
                                        const Event& e) {
    auto chart = [&](const Event& src) {
        return Eigen::Vector3d(src.spatial() - rec.station_event.spatial());
    };
    Eigen::Matrix3d frame;
    for (int i = 0; i < 3; ++i) frame.col(i) = chart(rec.ref_events[(size_t)i]);
    Eigen::Vector3d s = frame.partialPivLu().solve(chart(rec.fifth_event));
    for (int i = 0; i < 3; ++i) frame.col(i) *= s[i];
    Eigen::Vector3d r = frame.partialPivLu().solve(chart(e));
    Station4DInput in;
    const int p = rec.pair_first, q = rec.pair_second;
    in.a = {rec.ref_positions[0][p], rec.ref_positions[0][q]};
    in.b = {rec.ref_positions[1][p], rec.ref_positions[1][q]};
    in.c = {rec.ref_positions[2][p], rec.ref_positions[2][q]};
    in.fifth_stamp = rec.fifth_stamp;
    in.tan_alpha = r[0] / r[2];
    in.tan_beta = r[1] / r[2];
    return localize_station_4d(in);
}

void run_event_2d(const ScenarioConfig& config, const Event& e,
                  ReportRow& row) {
    const std::vector<Emitter>& em = config.emitters;
    row.emission = emission_coordinates(em, e, config.bracket);
    // reception records at the two stations
    auto record = [&](int i) {
        double s = solve_null_reception(em[(size_t)i].worldline, e,
                                        config.bracket);
        Event station = em[(size_t)i].worldline.eval(s);
        return emission_coordinates(em, station, config.bracket);
    };
    EmissionPosition pos = localize_2d(record(0), record(1));
    row.stereo.stamps = pos.stamps;
    row.oracle_delta = (pos.stamps - row.emission.stamps).cwiseAbs().maxCoeff();
}

void run_event_3d(const ScenarioConfig& config, const Event& e,
                  ReportRow& row) {
    const std::vector<Emitter>& em = config.emitters;
    row.emission = emission_coordinates(em, e, config.bracket);
    Echo3D echo = assemble_echo_3d(em, config.anchor->emitter, e,
                                   config.bracket);
    std::array<projective::ProjPoint1, 3> readings;
    std::array<Tetrad, 3> tets;
    for (int i = 0; i < 3; ++i) {
        const EchoRecord3D& rec = echo.records[(size_t)i];
        double s = parameter_of(em[(size_t)i].worldline, rec.station_event);
        tets[(size_t)i] = tetrad_at(em[(size_t)i], s);
        Direction e_dir = incoming_direction(tets[(size_t)i], e);
        readings[(size_t)i] = normalize_reading_rp1(
            e_dir, {incoming_direction(tets[(size_t)i], rec.first_event),
                    incoming_direction(tets[(size_t)i], rec.second_event),
                    incoming_direction(tets[(size_t)i], rec.fifth_event)});
    }
    double anchor = message_coordinate(*config.anchor, e, config.bracket);
    StereoPosition pos =
        localize_3d_intrinsic(intrinsic_stations(echo, readings), anchor);
    row.stereo = pos;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const EchoRecord3D& rec = echo.records[(size_t)i];
        double r = sine_reading_oracle(tets[(size_t)i], e, rec.first_event,
                                       rec.second_event, rec.fifth_event);
        double tau = projective::apply_fraction(
            projective::moebius_coefficients(rec.first_triple[(size_t)i],
                                             rec.second_triple[(size_t)i],
                                             rec.fifth_stamp),
            r);
        worst = std::max(worst, std::abs(tau - pos.stamps[i]));
    }
    row.oracle_delta = worst;
}

void run_event_4d(const ScenarioConfig& config, const Event& e,
                  ReportRow& row) {
    const std::vector<Emitter>& em = config.emitters;
    row.emission = emission_coordinates(em, e, config.bracket);
    Echo4D echo = assemble_station_records_4d(em, config.anchor->emitter, e,
                                              config.bracket,
                                              config.attribution);
    std::array<projective::ProjPoint2, 4> readings;
    for (int i = 0; i < 4; ++i) {
        const StationRecord4D& rec = echo.stations[(size_t)i];
        double s = parameter_of(em[(size_t)i].worldline, rec.station_event);
        Tetrad tet = tetrad_at(em[(size_t)i], s);
        Direction e_dir = incoming_direction(tet, e);
        readings[(size_t)i] = normalize_reading_rp2(
            e_dir, {incoming_direction(tet, rec.ref_events[0]),
                    incoming_direction(tet, rec.ref_events[1]),
                    incoming_direction(tet, rec.ref_events[2]),
                    incoming_direction(tet, rec.fifth_event)});
    }
    double anchor = message_coordinate(*config.anchor, e, config.bracket);
    StereoPosition pos = localize_4d(stations_4d(echo, readings), anchor,
                                     config.tolerance);
    row.stereo = pos;
    row.max_constraint = pos.constraint_residuals.cwiseAbs().maxCoeff();
    std::array<double, 2> o0 = station_oracle_4d(echo.stations[0], e);
    std::array<double, 2> o2 = station_oracle_4d(echo.stations[2], e);
    row.oracle_delta = std::max(
        std::max(std::abs(o0[0] - pos.stamps[0]),
                 std::abs(o0[1] - pos.stamps[1])),
        std::max(std::abs(o2[0] - pos.stamps[2]),
                 std::abs(o2[1] - pos.stamps[3])));
}

void run_event_forward(const ScenarioConfig& config, const Event& e,
                       ReportRow& row) {
    row.emission = emission_coordinates(config.emitters, e, config.bracket);
    Event back =
        cartesian_of_emission(config.emitters, row.emission, config.bracket);
    row.oracle_delta = (back.coords - e.coords).cwiseAbs().maxCoeff();
}

} // namespace

LocalizationReport run_scenario(const ScenarioConfig& config, bool localize) {
    LocalizationReport report;
    report.scenario = scenario_hash(config);
    report.seed = config.seed;
    report.dimension = config.dimension;
    std::vector<Event> events = seeded_events(config);
    log::info("running scenario over " + std::to_string(events.size()) +
              " events (dimension " + std::to_string(config.dimension) + ")");
    for (size_t idx = 0; idx < events.size(); ++idx) {
        ReportRow row;
        row.event_index = (int)idx;
        row.true_event = events[idx];
        try {
            if (!localize)
                run_event_forward(config, events[idx], row);
            else if (config.dimension == 2)
                run_event_2d(config, events[idx], row);
            else if (config.dimension == 3)
                run_event_3d(config, events[idx], row);
            else
                run_event_4d(config, events[idx], row);
        } catch (const Error& err) {
            row.error = err.what();
            log::warn("event " + std::to_string(idx) + ": " + err.what());
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join(const Eigen::VectorXd& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt(v[i]);
    }
    return out;
}

} // namespace

std::string report_csv(const LocalizationReport& report) {
    std::string out = "# scenario=" + std::to_string(report.scenario) +
                      " seed=" + std::to_string(report.seed) +
                      " dimension=" + std::to_string(report.dimension) + "\n";
    const int d = report.dimension;
    out += "index";
    for (int i = 0; i < d; ++i) out += ",event_" + std::to_string(i);
    for (int i = 0; i < d; ++i) out += ",emission_" + std::to_string(i);
    for (int i = 0; i < d; ++i) out += ",stereo_" + std::to_string(i);
    out += ",anchor,oracle_delta,max_constraint,error\n";
    for (const ReportRow& r : report.rows) {
        out += std::to_string(r.event_index);
        auto pad = [&](const Eigen::VectorXd& v) {
            for (int i = 0; i < d; ++i)
                out += "," + (i < v.size() ? fmt(v[i]) : std::string());
        };
        pad(r.true_event.coords);
        pad(r.emission.stamps);
        pad(r.stereo.stamps);
        out += "," + (r.stereo.has_anchor ? fmt(r.stereo.anchor) : std::string());
        out += "," + fmt(r.oracle_delta);
        out += "," + fmt(r.max_constraint);
        out += "," + r.error + "\n";
    }
    return out;
}

std::string report_json(const LocalizationReport& report) {
    json j;
    j["scenario"] = report.scenario;
    j["seed"] = report.seed;
    j["dimension"] = report.dimension;
    j["rows"] = json::array();
    for (const ReportRow& r : report.rows) {
        json row;
        row["index"] = r.event_index;
        row["event"] = std::vector<double>(
            r.true_event.coords.data(),
            r.true_event.coords.data() + r.true_event.coords.size());
        row["emission"] = std::vector<double>(
            r.emission.stamps.data(),
            r.emission.stamps.data() + r.emission.stamps.size());
        row["stereo"] = std::vector<double>(
            r.stereo.stamps.data(),
            r.stereo.stamps.data() + r.stereo.stamps.size());
        if (r.stereo.has_anchor) row["anchor"] = r.stereo.anchor;
        if (r.stereo.constraint_residuals.size() > 0)
            row["constraint_residuals"] = std::vector<double>(
                r.stereo.constraint_residuals.data(),
                r.stereo.constraint_residuals.data() +
                    r.stereo.constraint_residuals.size());
        row["oracle_delta"] = r.oracle_delta;
        row["max_constraint"] = r.max_constraint;
        if (!r.error.empty()) row["error"] = r.error;
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string builtin_config_2d() {
    return R"({
  "schema_version": 1,
  "dimension": 2,
  "emitters": [
    {"id": "W1", "worldline": {"kind": "static", "position": [-10]}},
    {"id": "W2", "worldline": {"kind": "static", "position": [10]}}
  ],
  "events": {"random_count": 100, "radius": 3.0, "time_radius": 2.0},
  "seed": 1,
  "bracket": [-1000, 1000]
})";
}

std::string builtin_config_3d() {
    return R"({
  "schema_version": 1,
  "dimension": 3,
  "emitters": [
    {"id": "E", "worldline": {"kind": "static", "position": [10.0, 0.0]}},
    {"id": "Et", "worldline": {"kind": "static", "position": [-6.0, 7.0]}},
    {"id": "Eh", "worldline": {"kind": "static", "position": [-2.0, -9.0]}}
  ],
  "anchor": {"id": "S",
             "worldline": {"kind": "static", "position": [2.0, 3.0]},
             "origin_parameter": -500.0},
  "events": {"random_count": 100, "radius": 2.5, "time_radius": 1.5},
  "seed": 2,
  "bracket": [-1000, 1000]
})";
}

std::string builtin_config_4d() {
    return R"({
  "schema_version": 1,
  "dimension": 4,
  "emitters": [
    {"id": "E", "worldline": {"kind": "static", "position": [10.0, 0.0, 1.0]}},
    {"id": "Eb", "worldline": {"kind": "static", "position": [-1.0, 9.0, 2.0]}},
    {"id": "Et", "worldline": {"kind": "static", "position": [-3.0, -8.0, 4.0]}},
    {"id": "Eh", "worldline": {"kind": "static", "position": [7.0, -2.0, -8.0]}}
  ],
  "anchor": {"id": "S",
             "worldline": {"kind": "static", "position": [3.0, 4.0, 12.0]},
             "origin_parameter": -500.0},
  "events": {"random_count": 50, "radius": 2.0, "time_radius": 1.0},
  "seed": 3,
  "bracket": [-1000, 1000]
})";
}

} // namespace rls
