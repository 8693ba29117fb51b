#pragma once

#include <string>

#include <json.hpp>

#include "hypertree/berge.hpp"
#include "hypertree/bounds.hpp"
#include "hypertree/enumeration.hpp"
#include "hypertree/hypergraph.hpp"
#include "hypertree/line_graph.hpp"
#include "hypertree/recognition.hpp"

namespace hypertree {

/// .khg text format: '#'-lines are comments, the first data line is "k n",
/// every further data line holds the k vertex ids of one edge. Parsing a
/// serialized document reproduces the hypergraph exactly; serialization is
/// canonical.
Hypergraph parse_khg(const std::string& text);
std::string serialize_khg(const Hypergraph& h);

/// Undirected DOT graph with nodes e1..em in canonical edge order.
std::string export_dot(const TightLineGraph& g);

nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const PhiTable& t);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const EnumerationStats& s);
nlohmann::json to_json(const ConjectureProbe& p);
nlohmann::json to_json(const BergeForestIdentity& r);
nlohmann::json to_json(const LovaszInequality& r);

EnumerationStats stats_from_json(const nlohmann::json& j);

std::string emit_report(const ClassificationReport& r);
std::string emit_report(const BoundReport& r);
std::string emit_report(const EnumerationStats& s);
std::string emit_report(const ConjectureProbe& p);

}  // namespace hypertree
