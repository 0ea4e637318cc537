#ifndef RLS_SCENARIO_HPP
#define RLS_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rls/localization.hpp"

// Scenario ingestion (JSON config), deterministic batch execution of the
// simulation/localization pipeline, and report emission (CSV/JSON).

namespace rls {

struct EventSeeding {
    std::vector<Event> explicit_events;
    int random_count = 0;
    Eigen::VectorXd center; // spatial center of the sampling box
    double radius = 1.0;    // half-width of the box
    double time_center = 0.0;
    double time_radius = 1.0;
};

struct ScenarioConfig {
    int schema_version = 1;
    int dimension = 3; // spacetime dimension: 2, 3 or 4
    std::vector<Emitter> emitters;
    std::optional<AnchoringWorldline> anchor; // required for dimension 3, 4
    EventSeeding events;
    std::uint64_t seed = 0;
    Bracket bracket{-1e4, 1e4};
    double tolerance = 1e-8;
    Attribution4D attribution;
};

ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::string& path);
std::string canonical_dump(const ScenarioConfig& config);
std::uint64_t scenario_hash(const ScenarioConfig& config);

// Deterministic uniform double in [lo, hi) from a raw 64-bit draw, with an
// explicit bit mapping so results are identical across platforms.
double uniform_from_bits(std::uint64_t bits, double lo, double hi);

// The events a scenario runs over: explicit list plus seeded random draws.
std::vector<Event> seeded_events(const ScenarioConfig& config);

struct ReportRow {
    int event_index = 0;
    Event true_event;
    EmissionPosition emission;
    StereoPosition stereo;       // empty stamps in dimension 2
    double oracle_delta = 0.0;   // worst deviation from the independent oracle
    double max_constraint = 0.0; // worst consistency residual (4D)
    std::string error;           // empty when the row succeeded
};

struct LocalizationReport {
    std::uint64_t scenario = 0; // scenario hash
    std::uint64_t seed = 0;
    int dimension = 2;
    std::vector<ReportRow> rows;
    bool all_ok() const;
};

// simulate = forward pipeline only (emission coordinates + echo assembly
// checks); localize = full protocol with oracle deltas.
LocalizationReport run_scenario(const ScenarioConfig& config,
                                bool localize = true);

std::string report_csv(const LocalizationReport& report);
std::string report_json(const LocalizationReport& report);

// Built-in configs used by the CLI when no --config is given and by the
// acceptance suite.
std::string builtin_config_2d();
std::string builtin_config_3d();
std::string builtin_config_4d();

} // namespace rls

#endif
