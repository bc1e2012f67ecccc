#pragma once

// JSON views of the library's value types, built on nlohmann::json with
// insertion-ordered keys so emitted documents are stable byte-for-byte.

#include "napkin/bench.hpp"
#include "napkin/distribution.hpp"
#include "napkin/oracle.hpp"
#include "napkin/paths.hpp"
#include "napkin/seating.hpp"

#include <json.hpp>

#include <string>

namespace napkin {

using Json = nlohmann::ordered_json;

inline Json to_json(const DiningOutcome& outcome) {
    Json seats = Json::array();
    for (int seat = 1; seat <= outcome.size(); ++seat) {
        const SeatOutcome& s = outcome.at_seat(seat);
        seats.push_back({{"seat", seat},
                         {"diner", s.diner},
                         {"preference", s.preference > 0 ? "+" : "-"},
                         {"napkin", std::string(napkin_name(s.napkin))},
                         {"status", std::string(status_name(s.status))}});
    }
    return Json{{"seats", seats},
                {"napkinless", outcome.napkinless_diners()},
                {"frustrated", outcome.frustrated_diners()},
                {"napkinless_count", outcome.napkinless_count()},
                {"unclaimed_napkins", outcome.unclaimed_napkin_count()}};
}

/// Trace wire format: one record per diner, in arrival order.
inline Json to_json(const AlgorithmTrace& trace) {
    Json entries = Json::array();
    for (const TraceEntry& entry : trace.per_diner)
        entries.push_back({{"diner", entry.diner},
                           {"step", std::string(step_label(entry.step))},
                           {"seat", entry.seat},
                           {"x", entry.x},
                           {"y", entry.y}});
    return entries;
}

inline Json to_json(const PathDecoration& deco) {
    std::string vertices, edges;
    for (VertexColor c : deco.vertex_colors)
        vertices.push_back(c == VertexColor::Black ? 'B' : 'W');
    for (EdgeColor c : deco.edge_colors)
        edges.push_back(c == EdgeColor::Black ? 'B' : (c == EdgeColor::White ? 'W' : 'G'));
    return Json{{"drift", deco.drift},
                {"zenith", deco.zenith},
                {"dips", deco.dips},
                {"vertex_colors", vertices},
                {"edge_colors", edges}};
}

inline Json to_json(const DistributionTable& table) {
    Json counts = Json::array();
    Json probabilities = Json::array();
    for (size_t k = 0; k < table.counts.size(); ++k) {
        counts.push_back(table.counts[k].str());
        probabilities.push_back({{"k", k},
                                 {"ratio", boost::multiprecision::numerator(table.probabilities[k]).str() +
                                               "/" +
                                               boost::multiprecision::denominator(table.probabilities[k]).str()},
                                 {"value", to_double(table.probabilities[k])}});
    }
    return Json{{"n", table.n},
                {"q", table.q},
                {"counts", counts},
                {"probabilities", probabilities},
                {"expectation",
                 {{"ratio", boost::multiprecision::numerator(table.expectation).str() + "/" +
                                boost::multiprecision::denominator(table.expectation).str()},
                  {"value", to_double(table.expectation)},
                  {"decimal", to_fixed_decimal(table.expectation, 15)}}}};
}

inline Json to_json(const MonteCarloResult& result) {
    return Json{{"mean", result.mean},
                {"stderr", result.std_error},
                {"samples", result.samples},
                {"seed", result.seed}};
}

}  // namespace napkin
