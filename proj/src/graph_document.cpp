#include "meander/graph_document.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace meander {

using ordered_json = nlohmann::ordered_json;

GraphDocument make_graph_document(const SeaweedSpec& spec) {
  MeanderGraph g = build_meander(spec);
  ComponentAnalysis an = analyze_components(g);

  GraphDocument doc;
  doc.algebra_type = std::string(1, algebra_type_char(spec.type));
  doc.n = spec.n;
  doc.a = spec.a.parts();
  doc.b = spec.b.parts();
  doc.crossing = spec.crossing;
  doc.arcs_below = g.arcs_below;
  doc.arcs_above = g.arcs_above;
  if (g.has_mirror) doc.mirror = g.mirror_position();
  for (const GraphComponent& c : an.components)
    doc.components.push_back({c.is_cycle ? "cycle" : "segment", c.vertices, c.sigma_stable, c.strange});
  doc.m_a = an.summary.m_a;
  doc.m_b = an.summary.m_b;

  switch (spec.type) {
    case AlgebraType::A:
      doc.index = 2 * an.summary.cycles + an.summary.segments;
      break;
    case AlgebraType::B:
    case AlgebraType::C:
      doc.index = an.summary.cycles + (an.summary.segments - an.summary.sigma_stable_segments) / 2;
      break;
    case AlgebraType::D: {
      IndexReport r = index_D_of_graph(g);
      doc.index = r.index;
      doc.epsilon = r.epsilon;
      break;
    }
  }
  return doc;
}

namespace {

ordered_json arcs_to_json(const std::vector<Arc>& arcs) {
  ordered_json out = ordered_json::array();
  for (const Arc& e : arcs) out.push_back({e.first, e.second});
  return out;
}

std::vector<Arc> arcs_from_json(const ordered_json& j) {
  std::vector<Arc> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("arc must be a pair");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

}  // namespace

std::string encode_graph_document(const GraphDocument& doc, int indent) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["algebra_type"] = doc.algebra_type;
  j["n"] = doc.n;
  j["a"] = doc.a;
  j["b"] = doc.b;
  j["crossing"] = doc.crossing;
  j["arcs_below"] = arcs_to_json(doc.arcs_below);
  j["arcs_above"] = arcs_to_json(doc.arcs_above);
  j["mirror"] = doc.mirror ? ordered_json(*doc.mirror) : ordered_json(nullptr);
  ordered_json comps = ordered_json::array();
  for (const ComponentDocument& c : doc.components) {
    ordered_json jc;
    jc["kind"] = c.kind;
    jc["vertices"] = c.vertices;
    jc["sigma_stable"] = c.sigma_stable;
    jc["strange"] = c.strange;
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  j["m_a"] = doc.m_a;
  j["m_b"] = doc.m_b;
  j["epsilon"] = doc.epsilon ? ordered_json(*doc.epsilon) : ordered_json(nullptr);
  j["index"] = doc.index;
  return j.dump(indent);
}

GraphDocument decode_graph_document(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  GraphDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  if (doc.schema_version != "1")
    throw std::invalid_argument("unsupported schema_version " + doc.schema_version);
  doc.algebra_type = j.at("algebra_type").get<std::string>();
  if (doc.algebra_type.size() != 1) throw std::invalid_argument("bad algebra_type");
  algebra_type_from_char(doc.algebra_type[0]);  // validates
  doc.n = j.at("n").get<int>();
  doc.a = j.at("a").get<std::vector<int>>();
  doc.b = j.at("b").get<std::vector<int>>();
  doc.crossing = j.at("crossing").get<bool>();
  doc.arcs_below = arcs_from_json(j.at("arcs_below"));
  doc.arcs_above = arcs_from_json(j.at("arcs_above"));
  if (!j.at("mirror").is_null()) doc.mirror = j.at("mirror").get<double>();
  for (const auto& jc : j.at("components")) {
    ComponentDocument c;
    c.kind = jc.at("kind").get<std::string>();
    if (c.kind != "cycle" && c.kind != "segment") throw std::invalid_argument("bad component kind");
    c.vertices = jc.at("vertices").get<std::vector<int>>();
    c.sigma_stable = jc.at("sigma_stable").get<bool>();
    c.strange = jc.at("strange").get<bool>();
    doc.components.push_back(std::move(c));
  }
  doc.m_a = j.at("m_a").get<int>();
  doc.m_b = j.at("m_b").get<int>();
  if (!j.at("epsilon").is_null()) doc.epsilon = j.at("epsilon").get<int>();
  doc.index = j.at("index").get<int>();
  return doc;
}

std::string enumeration_csv_header() {
  return "n,s_mask,t_mask,crossing,index,epsilon,cycles,segments,sigma_stable_segments,frobenius";
}

std::string enumeration_csv_row(const EnumerationRecord& rec) {
  std::string out;
  out += std::to_string(rec.n);
  out += ',';
  out += std::to_string(rec.s_mask);
  out += ',';
  out += std::to_string(rec.t_mask);
  out += ',';
  out += rec.crossing ? '1' : '0';
  out += ',';
  out += std::to_string(rec.index);
  out += ',';
  out += std::to_string(rec.epsilon);
  out += ',';
  out += std::to_string(rec.cycles);
  out += ',';
  out += std::to_string(rec.segments);
  out += ',';
  out += std::to_string(rec.sigma_stable_segments);
  out += ',';
  out += rec.frobenius ? '1' : '0';
  return out;
}

}  // namespace meander
