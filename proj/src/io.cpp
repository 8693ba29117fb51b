#include "hypertree/io.hpp"

#include <sstream>

namespace hypertree {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<int> parse_int_line(const std::string& line, int lineno,
                                std::size_t expected) {
  std::istringstream in(line);
  std::vector<int> out;
  long long v;
  while (in >> v) out.push_back(static_cast<int>(v));
  if (!in.eof()) {
    std::string junk;
    in.clear();
    in >> junk;
    throw ParseError("line " + std::to_string(lineno) +
                     ": unexpected token '" + junk + "'");
  }
  if (out.size() != expected)
    throw ParseError("line " + std::to_string(lineno) + ": expected " +
                     std::to_string(expected) + " integers, found " +
                     std::to_string(out.size()));
  return out;
}

nlohmann::json witness_json(const InstanceWitness& w) {
  return {{"index", w.index}, {"edges", w.edges}};
}

InstanceWitness witness_from_json(const nlohmann::json& j) {
  InstanceWitness w;
  w.index = j.at("index").get<std::uint64_t>();
  w.edges = j.at("edges").get<std::vector<std::vector<int>>>();
  return w;
}

}  // namespace

Hypergraph parse_khg(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int k = -1, n = -1;
  std::vector<std::vector<int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_or_comment(line)) continue;
    if (k < 0) {
      auto header = parse_int_line(line, lineno, 2);
      k = header[0];
      n = header[1];
      if (k < 2 || n < k)
        throw ParseError("line " + std::to_string(lineno) +
                         ": header must satisfy n >= k >= 2");
    } else {
      edges.push_back(parse_int_line(line, lineno, k));
    }
  }
  if (k < 0) throw ParseError("missing 'k n' header line");
  return Hypergraph(k, n, std::move(edges));
}

std::string serialize_khg(const Hypergraph& h) {
  std::ostringstream out;
  out << h.uniformity() << " " << h.vertex_count() << "\n";
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      out << (i ? " " : "") << e[i];
    out << "\n";
  }
  return out.str();
}

std::string export_dot(const TightLineGraph& g) {
  std::ostringstream out;
  out << "graph tight_line_graph {\n";
  for (int i = 0; i < g.node_count; ++i)
    out << "  e" << (i + 1) << ";\n";
  for (int i = 0; i < g.node_count; ++i)
    g.adjacency[i].for_each([&](int j) {
      if (i < j) out << "  e" << (i + 1) << " -- e" << (j + 1) << ";\n";
    });
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j{{"n", r.n},
                   {"k", r.k},
                   {"m", r.m},
                   {"chain_connected", r.chain_connected},
                   {"semicycle_free", r.semicycle_free},
                   {"hypertree", r.hypertree},
                   {"max_chain_length", r.max_chain_length},
                   {"focus_vertices", r.focus_vertices},
                   {"line_graph_connected", r.line_graph_connected},
                   {"line_graph_components", r.line_graph_components}};
  if (r.edge_minimal) j["edge_minimal"] = *r.edge_minimal;
  if (r.edge_maximal) j["edge_maximal"] = *r.edge_maximal;
  if (r.geometric_l) j["geometric_l"] = *r.geometric_l;
  if (r.chain_connected_general) {
    j["chain_connected_general"] = *r.chain_connected_general;
    j["chain_connectivity_disagreement"] =
        *r.chain_connected_general != r.chain_connected;
  }
  return j;
}

nlohmann::json to_json(const PhiTable& t) {
  return {{"deletion_order", t.domain},
          {"chains", t.chains},
          {"maps", t.maps}};
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j{{"bound_name", r.bound_name},
                   {"n", r.n},
                   {"k", r.k},
                   {"m", r.m},
                   {"bound_value", r.bound_value},
                   {"bound_divisor", r.bound_divisor},
                   {"holds", r.holds},
                   {"applicable", r.applicable},
                   {"counterexample", r.counterexample},
                   {"hypothesis", r.hypothesis}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

nlohmann::json to_json(const EnumerationStats& s) {
  nlohmann::json j{{"n", s.n},
                   {"k", s.k},
                   {"universe_size", s.universe_size},
                   {"total_edge_sets", s.total_edge_sets},
                   {"skipped_non_covering", s.skipped_non_covering},
                   {"counts",
                    {{"chain_connected", s.chain_connected},
                     {"semicycle_free", s.semicycle_free},
                     {"hypertree", s.hypertree},
                     {"edge_minimal", s.edge_minimal},
                     {"edge_maximal", s.edge_maximal}}},
                   {"violations",
                    {{"lower_bound", s.lower_bound_violations},
                     {"upper_bound", s.upper_bound_violations},
                     {"cycle_implies_semicycle", s.cycle_implication_violations},
                     {"semicycle_oracle", s.oracle_agreement_violations},
                     {"class_coverage", s.class_coverage_violations}}},
                   {"semicycle_oracle_checked", s.oracle_agreement_checked}};
  if (s.min_hypertree) j["min_hypertree"] = witness_json(*s.min_hypertree);
  if (s.max_hypertree) j["max_hypertree"] = witness_json(*s.max_hypertree);
  if (s.max_edge_minimal)
    j["max_edge_minimal"] = witness_json(*s.max_edge_minimal);
  if (s.min_edge_maximal)
    j["min_edge_maximal"] = witness_json(*s.min_edge_maximal);
  if (s.hypertree_iso_classes) {
    j["iso"] = {{"hypertree_classes", *s.hypertree_iso_classes},
                {"edge_minimal_classes", *s.edge_minimal_iso_classes},
                {"edge_maximal_classes", *s.edge_maximal_iso_classes}};
  }
  return j;
}

EnumerationStats stats_from_json(const nlohmann::json& j) {
  EnumerationStats s;
  s.n = j.at("n");
  s.k = j.at("k");
  s.universe_size = j.at("universe_size");
  s.total_edge_sets = j.at("total_edge_sets");
  s.skipped_non_covering = j.at("skipped_non_covering");
  const auto& counts = j.at("counts");
  s.chain_connected = counts.at("chain_connected");
  s.semicycle_free = counts.at("semicycle_free");
  s.hypertree = counts.at("hypertree");
  s.edge_minimal = counts.at("edge_minimal");
  s.edge_maximal = counts.at("edge_maximal");
  const auto& v = j.at("violations");
  s.lower_bound_violations = v.at("lower_bound");
  s.upper_bound_violations = v.at("upper_bound");
  s.cycle_implication_violations = v.at("cycle_implies_semicycle");
  s.oracle_agreement_violations = v.at("semicycle_oracle");
  s.class_coverage_violations = v.at("class_coverage");
  s.oracle_agreement_checked = j.at("semicycle_oracle_checked");
  if (j.contains("min_hypertree"))
    s.min_hypertree = witness_from_json(j.at("min_hypertree"));
  if (j.contains("max_hypertree"))
    s.max_hypertree = witness_from_json(j.at("max_hypertree"));
  if (j.contains("max_edge_minimal"))
    s.max_edge_minimal = witness_from_json(j.at("max_edge_minimal"));
  if (j.contains("min_edge_maximal"))
    s.min_edge_maximal = witness_from_json(j.at("min_edge_maximal"));
  if (j.contains("iso")) {
    const auto& iso = j.at("iso");
    s.hypertree_iso_classes =
        iso.at("hypertree_classes").get<std::set<std::uint64_t>>();
    s.edge_minimal_iso_classes =
        iso.at("edge_minimal_classes").get<std::set<std::uint64_t>>();
    s.edge_maximal_iso_classes =
        iso.at("edge_maximal_classes").get<std::set<std::uint64_t>>();
  }
  return s;
}

nlohmann::json to_json(const ConjectureProbe& p) {
  nlohmann::json j{{"n", p.n},
                   {"k", p.k},
                   {"pair_count", p.pair_count},
                   {"conjectural", true},
                   {"degenerate", p.degenerate}};
  nlohmann::json mins{{"count", p.edge_minimal_count},
                      {"bound_value", p.pair_count},
                      {"bound_divisor", p.k - 1},
                      {"violation", p.edge_minimal_bound_violated}};
  if (p.max_edge_minimal_edges) mins["max_edges"] = *p.max_edge_minimal_edges;
  nlohmann::json maxs{{"count", p.edge_maximal_count},
                      {"reference_value", p.pair_count},
                      {"reference_divisor", 2},
                      {"below_reference", p.edge_maximal_below_reference}};
  if (p.min_edge_maximal_edges) maxs["min_edges"] = *p.min_edge_maximal_edges;
  j["edge_minimal"] = mins;
  j["edge_maximal"] = maxs;
  return j;
}

nlohmann::json to_json(const BergeForestIdentity& r) {
  return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"cycle_free", r.cycle_free}};
}

nlohmann::json to_json(const LovaszInequality& r) {
  return {{"applicable", r.applicable}, {"lhs", r.lhs}, {"rhs", r.rhs}};
}

std::string emit_report(const ClassificationReport& r) {
  return to_json(r).dump(2) + "\n";
}
std::string emit_report(const BoundReport& r) { return to_json(r).dump(2) + "\n"; }
std::string emit_report(const EnumerationStats& s) {
  return to_json(s).dump(2) + "\n";
}
std::string emit_report(const ConjectureProbe& p) {
  return to_json(p).dump(2) + "\n";
}

}  // namespace hypertree
