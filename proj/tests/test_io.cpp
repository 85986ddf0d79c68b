#include <doctest.h>

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "meander/graph_document.hpp"
#include "meander/render.hpp"

using namespace meander;

TEST_CASE("graph document carries the full index report") {
  GraphDocument doc = make_graph_document(SeaweedSpec::make_D(6, Composition{2, 4}, Composition{6}, true));
  CHECK(doc.schema_version == "1");
  CHECK(doc.algebra_type == "D");
  CHECK(doc.n == 6);
  CHECK(doc.a == std::vector<int>{2, 4});
  CHECK(doc.b == std::vector<int>{6});
  CHECK(doc.crossing);
  CHECK(doc.mirror == 6.5);
  CHECK(doc.components.size() == 1);
  CHECK(doc.components[0].kind == "cycle");
  CHECK(doc.components[0].strange);
  CHECK(doc.epsilon == -1);
  CHECK(doc.index == 0);
}

TEST_CASE("type A documents have no mirror or epsilon") {
  GraphDocument doc = make_graph_document(SeaweedSpec::make_A(9, Composition{2, 4, 3}, Composition{5, 4}));
  CHECK(doc.algebra_type == "A");
  CHECK(!doc.mirror.has_value());
  CHECK(!doc.epsilon.has_value());
  CHECK(doc.index == 3);  // gl flavor
}

TEST_CASE("json round trip is the identity") {
  for (auto spec : {SeaweedSpec::make_A(9, Composition{2, 4, 3}, Composition{5, 4}),
                    SeaweedSpec::make_B(5, Composition{1}, Composition{2, 2}),
                    SeaweedSpec::make_C(5, Composition{2, 2, 1}, Composition{3, 2}),
                    SeaweedSpec::make_D(5, Composition{2, 3}, Composition{1, 4}, true),
                    SeaweedSpec::make_D(5, Composition{1, 1, 1, 1, 1}, Composition{}, false)}) {
    GraphDocument doc = make_graph_document(spec);
    GraphDocument back = decode_graph_document(encode_graph_document(doc));
    CHECK(back == doc);
  }
}

TEST_CASE("json field order follows the schema") {
  GraphDocument doc = make_graph_document(SeaweedSpec::make_D(4, Composition{2, 2}, Composition{1}, false));
  std::string text = encode_graph_document(doc);
  CHECK(text.find("\"schema_version\"") < text.find("\"algebra_type\""));
  CHECK(text.find("\"algebra_type\"") < text.find("\"arcs_below\""));
  CHECK(text.find("\"arcs_below\"") < text.find("\"arcs_above\""));
  CHECK(text.find("\"components\"") < text.find("\"epsilon\""));
  CHECK(text.find("\"epsilon\"") < text.find("\"index\""));

  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == "1");
  CHECK(j["epsilon"] == -1);
  CHECK(j["m_b"] == 3);
  CHECK(j["mirror"] == 4.5);
}

TEST_CASE("decoding rejects malformed documents") {
  GraphDocument doc = make_graph_document(SeaweedSpec::make_D(3, Composition{3}, Composition{3}, false));
  nlohmann::json j = nlohmann::json::parse(encode_graph_document(doc));

  nlohmann::json bad_version = j;
  bad_version["schema_version"] = "7";
  CHECK_THROWS_AS(decode_graph_document(bad_version.dump()), std::invalid_argument);

  nlohmann::json bad_type = j;
  bad_type["algebra_type"] = "E";
  CHECK_THROWS_AS(decode_graph_document(bad_type.dump()), std::invalid_argument);

  nlohmann::json bad_kind = j;
  bad_kind["components"][0]["kind"] = "loop";
  CHECK_THROWS_AS(decode_graph_document(bad_kind.dump()), std::invalid_argument);

  CHECK_THROWS(decode_graph_document("not json"));
}

TEST_CASE("csv rows") {
  CHECK(enumeration_csv_header() ==
        "n,s_mask,t_mask,crossing,index,epsilon,cycles,segments,sigma_stable_segments,frobenius");
  EnumerationRecord rec{};
  rec.n = 6;
  rec.s_mask = 0b101101;
  rec.t_mask = 0b011111;
  rec.crossing = true;
  rec.index = 0;
  rec.epsilon = -1;
  rec.cycles = 1;
  rec.segments = 0;
  rec.sigma_stable_segments = 0;
  rec.frobenius = true;
  CHECK(enumeration_csv_row(rec) == "6,45,31,1,0,-1,1,0,0,1");
}

TEST_CASE("ascii rendering shows vertices, arcs and the axis") {
  std::string art = render_ascii(SeaweedSpec::make_C(3, Composition{2}, Composition{1, 1}));
  CHECK(art.find('o') != std::string::npos);
  CHECK(art.find(':') != std::string::npos);   // the mirror axis
  CHECK(art.find('\\') != std::string::npos);  // below arcs
  CHECK(art.find('/') != std::string::npos);

  // type A graphs have no axis
  std::string flat = render_ascii(SeaweedSpec::make_A(4, Composition{2, 2}, Composition{4}));
  CHECK(flat.find(':') == std::string::npos);
}

TEST_CASE("svg rendering is well formed") {
  std::string svg = render_svg(SeaweedSpec::make_D(5, Composition{2, 3}, Composition{1, 4}, true));
  CHECK(svg.rfind("<svg", 0) != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  CHECK(svg.find("dash") != std::string::npos);  // the mirror axis
  // one vertex label per vertex
  size_t count = 0;
  for (size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++count;
  CHECK(count == 10);
}
