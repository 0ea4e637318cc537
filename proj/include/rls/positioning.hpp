#ifndef RLS_POSITIONING_HPP
#define RLS_POSITIONING_HPP

#include <array>
#include <string>
#include <vector>

#include "rls/constellation.hpp"

// Emission coordinates (broadcast stamps received at an event), assembly of
// the echo-data bundles collected at each relay station, and changes of
// chart between emission grids.

namespace rls {

struct EmissionPosition {
    Eigen::VectorXd stamps; // one broadcast stamp per emitter
};

// stamp_i at the parameter whose future null cone carries x
EmissionPosition emission_coordinates(const std::vector<Emitter>& emitters,
                                      const Event& x, Bracket bracket);

// Inverse chart: the event whose emission coordinates are p. Unstamps to
// emission events and intersects their future null cones; verifies the
// round trip to 1e-10.
Event cartesian_of_emission(const std::vector<Emitter>& emitters,
                            const EmissionPosition& p, Bracket bracket);

EmissionPosition grid_change(const std::vector<Emitter>& from,
                             const std::vector<Emitter>& to,
                             const EmissionPosition& p, Bracket bracket);

// One relay station's bundle for the three-emitter protocol: its own stamp,
// the grid 3-positions of the two neighbor events it sees, the localizing
// satellite's stamp, plus the underlying geometry kept for observation and
// oracle checks.
struct EchoRecord3D {
    std::string emitter_id;
    double primary_stamp = 0.0;         // station's own broadcast at reception
    std::array<double, 3> first_triple{};  // 3-position of first neighbor event
    std::array<double, 3> second_triple{}; // 3-position of second neighbor event
    double fifth_stamp = 0.0;           // localizing satellite's broadcast
    std::string signature;              // opaque event signature token

    Event station_event; // reception event of the user's light on this station
    Event first_event;   // first neighbor's event seen from the station
    Event second_event;  // second neighbor's event
    Event fifth_event;   // localizing satellite's event seen from the station
};

struct Echo3D {
    std::array<EchoRecord3D, 3> records; // station order = emitter order
    Event user_event;
};

// Stations are the three reception events of e's light; neighbors are
// assigned cyclically (station i sees emitters i+1 and i+2 as first and
// second).
Echo3D assemble_echo_3d(const std::vector<Emitter>& main3,
                        const Emitter& fifth, const Event& e, Bracket bracket,
                        const std::string& signature = "");

// One station's bundle for the four-emitter protocol: the three reference
// events it sees with their full grid 4-positions, the localizing
// satellite's stamp, and the stamp-pair attribution for this station.
struct StationRecord4D {
    std::string station_id;
    int pair_first = 0;  // indices into the 4-position for this station's pair
    int pair_second = 1;
    double primary_stamp = 0.0;
    std::array<std::string, 3> ref_ids;          // roles: [inf,0], [0,inf], [0,0]
    std::array<Eigen::Vector4d, 3> ref_positions; // 4-positions of those events
    double fifth_stamp = 0.0;                    // role [1,1]
    std::string signature;

    Event station_event;
    std::array<Event, 3> ref_events;
    Event fifth_event;
};

struct Echo4D {
    std::array<StationRecord4D, 4> stations; // order = emitter order
    Event user_event;
};

// All stamps of one localized event gathered across stations.
struct DataPoint {
    std::string event_id;
    std::vector<double> stamps;
};

// Reference-role and stamp-pair attribution per station (station row ->
// indices of the emitters seen in roles [inf,0], [0,inf], [0,0], and the
// 4-position component pair the station is responsible for).
struct Attribution4D {
    std::array<std::array<int, 3>, 4> refs{
        {{1, 2, 3}, {0, 3, 2}, {3, 0, 1}, {2, 1, 0}}};
    std::array<std::array<int, 2>, 4> pairs{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
};

Echo4D assemble_station_records_4d(const std::vector<Emitter>& main4,
                                   const Emitter& fifth, const Event& e,
                                   Bracket bracket,
                                   const Attribution4D& attribution = {},
                                   const std::string& signature = "");

DataPoint flatten(const Echo3D& echo, const std::string& event_id);
DataPoint flatten(const Echo4D& echo, const std::string& event_id);

} // namespace rls

#endif
