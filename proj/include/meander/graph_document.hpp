#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meander/frobenius.hpp"
#include "meander/index.hpp"
#include "meander/meander_graph.hpp"

namespace meander {

// Serializable snapshot of a meander graph and its index data. JSON schema
// (schema_version "1") keeps exactly these fields, in this order:
// schema_version, algebra_type, n, a, b, crossing, arcs_below, arcs_above,
// mirror, components, m_a, m_b, epsilon, index. `mirror` is the half-integer
// axis position or null (type A); `epsilon` is null outside type D.
struct ComponentDocument {
  std::string kind;  // "cycle" | "segment"
  std::vector<int> vertices;
  bool sigma_stable = false;
  bool strange = false;

  bool operator==(const ComponentDocument&) const = default;
};

struct GraphDocument {
  std::string schema_version = "1";
  std::string algebra_type;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;
  bool crossing = false;
  std::vector<Arc> arcs_below;
  std::vector<Arc> arcs_above;
  std::optional<double> mirror;
  std::vector<ComponentDocument> components;
  int m_a = 0;
  int m_b = 0;
  std::optional<int> epsilon;
  int index = 0;

  bool operator==(const GraphDocument&) const = default;
};

GraphDocument make_graph_document(const SeaweedSpec& spec);

std::string encode_graph_document(const GraphDocument& doc, int indent = 2);
GraphDocument decode_graph_document(const std::string& json_text);

// One CSV line per record; header:
// n,s_mask,t_mask,crossing,index,epsilon,cycles,segments,sigma_stable_segments,frobenius
std::string enumeration_csv_header();
std::string enumeration_csv_row(const EnumerationRecord& rec);

}  // namespace meander
