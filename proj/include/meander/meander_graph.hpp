#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "meander/seaweed.hpp"

namespace meander {

using Arc = std::pair<int, int>;  // endpoints, 1-based, first < second

// Planar meander graph: vertices 1..vertex_count on a horizontal line, arcs
// below the line coming from the first composition and arcs above from the
// second. Every vertex meets at most one arc per side. Mirror-symmetric
// graphs (types B, C, D) carry the involution sigma(v) = vertex_count+1-v.
struct MeanderGraph {
  int vertex_count = 0;
  bool has_mirror = false;
  bool crossing = false;
  std::vector<Arc> arcs_below;
  std::vector<Arc> arcs_above;

  int sigma(int v) const { return vertex_count + 1 - v; }
  // Axis of symmetry as a half-integer coordinate: (vertex_count + 1) / 2.
  double mirror_position() const { return (vertex_count + 1) / 2.0; }

  bool operator==(const MeanderGraph&) const = default;
};

enum class CrossingSide { Below, Above };

// Arc layout for one composition: part p at offset o contributes the nested
// arcs (o+k, o+p+1-k) for k = 1..floor(p/2); the widest spans the whole part
// and an odd part leaves its middle vertex free.
std::vector<Arc> arcs_of_composition(const Composition& a);

MeanderGraph build_meander_A(const Composition& a, const Composition& b);
MeanderGraph build_meander_B(const Composition& a, const Composition& b, int n);
MeanderGraph build_meander_C(const Composition& a, const Composition& b, int n);

// Type D: without crossing this is the type-C graph. With crossing the two
// widest arcs of the two central copies of the altered side's last part p are
// replaced by (n-p+1, n+1) and (n, n+p), the unique pair of mutually crossing
// arcs. The altered side is the side whose last part is smaller; ties go
// below. build_meander_D_sided forces the side (the reduction tracks states
// whose crossing sits opposite the smaller last part).
MeanderGraph build_meander_D(const SeaweedSpec& spec);
MeanderGraph build_meander_D_sided(const SeaweedSpec& spec, CrossingSide side);

// Dispatch on spec.type.
MeanderGraph build_meander(const SeaweedSpec& spec);

// --- components ----------------------------------------------------------------

struct GraphComponent {
  std::vector<int> vertices;  // in traversal order along the component
  bool is_cycle = false;
  bool sigma_stable = false;  // sigma maps the vertex set onto itself
  bool strange = false;       // contains a mirror-crossing arc (crossing graphs)
};

enum class StrangeKind { None, Cycle, SegmentPair };

struct ComponentSummary {
  int cycles = 0;
  int segments = 0;
  int sigma_stable_segments = 0;
  StrangeKind strange = StrangeKind::None;
  int m_a = 0;  // arcs below with one endpoint on each side of the mirror
  int m_b = 0;  // same, above
  // Whether the arc joining the two central vertices lies in a segment;
  // populated for mirror graphs without crossing when exactly one side has
  // central arcs.
  std::optional<bool> central_innermost_in_segment;
};

struct ComponentAnalysis {
  std::vector<GraphComponent> components;
  ComponentSummary summary;
};

ComponentAnalysis analyze_components(const MeanderGraph& g);

// --- three-piece splitting -------------------------------------------------------

// When a prefix of a and a prefix of b share the sum m (m <= n-2 or m = n),
// the graph of q_n(a|b) splits into a type-A piece on vertices 1..m, a
// central type-D piece, and the mirrored type-A piece; the central piece
// inherits the crossing. For crossing specs with m = n the halves describe
// the companion graph with the crossing reverted (the crossing arcs straddle
// the cut), and the center is empty.
struct ThreePieceSplit {
  SeaweedSpec left;                    // type A on m vertices
  std::optional<SeaweedSpec> center;   // type D, absent when m = n
  SeaweedSpec right;                   // type A, reversed compositions
};

ThreePieceSplit split_three_pieces(const SeaweedSpec& spec, int m);

// All values of m at which spec splits, increasing.
std::vector<int> split_points(const SeaweedSpec& spec);

}  // namespace meander
