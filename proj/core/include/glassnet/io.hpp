#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "glassnet/attractor.hpp"
#include "glassnet/dynamics.hpp"
#include "glassnet/embedding.hpp"
#include "glassnet/network.hpp"

namespace glassnet {

/// Network spec JSON:
///   {"variables": [{"name": "x1", "thresholds": [0, 1]}, ...],
///    "focal_points": {"0,0": [2, -1], ...}}
/// Throws ParseError for malformed JSON or a document that does not fit the schema.
/// Semantic problems (focal on a threshold, unsorted ladders) are left to validate().
GlassNetwork parse_network(std::string_view text);
GlassNetwork load_network(const std::filesystem::path& path);

nlohmann::json network_to_json(const GlassNetwork& net);
/// Canonical text form; parse_network(serialize_network(n)) == n.
std::string serialize_network(const GlassNetwork& net);
/// Hex SHA-256 of serialize_network().
std::string network_digest(const GlassNetwork& net);

/// JSON text with sorted keys and every float written with 17 significant digits.
/// Non-finite floats are written as the strings "inf", "-inf" and "nan".
std::string dump_json(const nlohmann::json& value, int indent = 2);

nlohmann::json report_json(const GlassNetwork& net, const CycleClassification& c);

/// Comma-separated coordinates, e.g. "-1,0.5".
Vector parse_vector(std::string_view text);

/// event_index,cumulative_time,<variable names>,wall; the start point is row 0 and a
/// final row carries "status" and the termination status in the wall column.
void write_trajectory_csv(std::ostream& os, const GlassNetwork& net, const EventTrajectory& traj);

/// State transition graph as a DOT digraph with quoted region keys as node names.
void write_dot(std::ostream& os, const TransitionGraph& graph);

nlohmann::json embedding_json(const GlassNetwork& net, const Embedding& emb,
                              const GlassNetwork& embedded);

}  // namespace glassnet
