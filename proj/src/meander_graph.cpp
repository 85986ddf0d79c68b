#include "meander/meander_graph.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <stdexcept>

namespace meander {

std::vector<Arc> arcs_of_composition(const Composition& a) {
  std::vector<Arc> arcs;
  int offset = 0;
  for (int p : a.parts()) {
    for (int k = 1; k <= p / 2; ++k) arcs.emplace_back(offset + k, offset + p + 1 - k);
    offset += p;
  }
  return arcs;
}

MeanderGraph build_meander_A(const Composition& a, const Composition& b) {
  if (a.sum() != b.sum())
    throw std::invalid_argument("type A meander needs |a| = |b|");
  MeanderGraph g;
  g.vertex_count = a.sum();
  g.arcs_below = arcs_of_composition(a);
  g.arcs_above = arcs_of_composition(b);
  return g;
}

MeanderGraph build_meander_B(const Composition& a, const Composition& b, int n) {
  MeanderGraph g = build_meander_A(symmetrize(a, n, Symmetrization::DoubledMiddlePlusOne),
                                   symmetrize(b, n, Symmetrization::DoubledMiddlePlusOne));
  g.has_mirror = true;
  return g;
}

MeanderGraph build_meander_C(const Composition& a, const Composition& b, int n) {
  MeanderGraph g = build_meander_A(symmetrize(a, n, Symmetrization::DoubledMiddle),
                                   symmetrize(b, n, Symmetrization::DoubledMiddle));
  g.has_mirror = true;
  return g;
}

namespace {

// Replaces the widest arcs of the two central copies of part p, turning the
// nested pair {(n-p+1, n), (n+1, n+p)} into the crossing pair
// {(n-p+1, n+1), (n, n+p)}.
void apply_crossing(std::vector<Arc>& arcs, int n, int p) {
  Arc left{n - p + 1, n}, right{n + 1, n + p};
  auto l = std::find(arcs.begin(), arcs.end(), left);
  auto r = std::find(arcs.begin(), arcs.end(), right);
  if (l == arcs.end() || r == arcs.end())
    throw std::logic_error("crossing alteration: central arcs not found");
  *l = Arc{n - p + 1, n + 1};
  *r = Arc{n, n + p};
}

}  // namespace

MeanderGraph build_meander_D_sided(const SeaweedSpec& spec, CrossingSide side) {
  if (spec.type != AlgebraType::D) throw std::invalid_argument("expected a type D spec");
  MeanderGraph g = build_meander_C(spec.a, spec.b, spec.n);
  if (!spec.crossing) return g;
  if (spec.a.sum() != spec.n || spec.b.sum() != spec.n)
    throw std::invalid_argument("crossing spec needs |a| = |b| = n");
  const Composition& c = (side == CrossingSide::Below) ? spec.a : spec.b;
  if (c.empty() || c.last() < 2)
    throw std::invalid_argument("crossing alteration needs last part >= 2 on the altered side");
  apply_crossing(side == CrossingSide::Below ? g.arcs_below : g.arcs_above, spec.n, c.last());
  g.crossing = true;
  return g;
}

MeanderGraph build_meander_D(const SeaweedSpec& spec) {
  if (!spec.crossing) return build_meander_D_sided(spec, CrossingSide::Below);
  CrossingSide side =
      spec.a.last() <= spec.b.last() ? CrossingSide::Below : CrossingSide::Above;
  return build_meander_D_sided(spec, side);
}

MeanderGraph build_meander(const SeaweedSpec& spec) {
  switch (spec.type) {
    case AlgebraType::A: return build_meander_A(spec.a, spec.b);
    case AlgebraType::B: return build_meander_B(spec.a, spec.b, spec.n);
    case AlgebraType::C: return build_meander_C(spec.a, spec.b, spec.n);
    case AlgebraType::D: return build_meander_D(spec);
  }
  throw std::logic_error("bad algebra type");
}

namespace {

bool is_central(const MeanderGraph& g, const Arc& arc) {
  double axis = g.mirror_position();
  return arc.first < axis && axis < arc.second;
}

}  // namespace

ComponentAnalysis analyze_components(const MeanderGraph& g) {
  const int V = g.vertex_count;
  // neighbor[side][v]: the vertex joined to v by the arc on that side, or 0.
  std::vector<std::array<int, 2>> nb(static_cast<size_t>(V) + 1, {0, 0});
  auto add = [&](const std::vector<Arc>& arcs, int side) {
    for (const Arc& e : arcs) {
      if (e.first < 1 || e.second > V || e.first >= e.second)
        throw std::invalid_argument("arc endpoints out of range");
      if (nb[e.first][side] || nb[e.second][side])
        throw std::invalid_argument("vertex meets two arcs on one side");
      nb[e.first][side] = e.second;
      nb[e.second][side] = e.first;
    }
  };
  add(g.arcs_below, 0);
  add(g.arcs_above, 1);

  std::set<Arc> crossing_arcs;
  if (g.crossing) {
    for (const auto* arcs : {&g.arcs_below, &g.arcs_above})
      for (const Arc& e : *arcs)
        if (is_central(g, e)) crossing_arcs.insert(e);
    // The alteration produces exactly the two mutually crossing arcs.
    if (crossing_arcs.size() != 2)
      throw std::logic_error("crossing graph must have exactly two mirror-crossing arcs");
  }

  ComponentAnalysis out;
  std::vector<char> seen(static_cast<size_t>(V) + 1, 0);
  for (int start = 1; start <= V; ++start) {
    if (seen[start]) continue;
    // Walk the path/cycle through `start`, alternating sides. For a segment,
    // first rewind to an endpoint (a vertex of degree <= 1 or whose walk
    // terminates); for a cycle any starting point works.
    int deg = (nb[start][0] ? 1 : 0) + (nb[start][1] ? 1 : 0);
    GraphComponent comp;
    if (deg == 0) {
      comp.vertices = {start};
      comp.is_cycle = false;
    } else {
      // Walk one way from start; either we return to start (cycle) or reach
      // an endpoint, from which the segment is traversed in full.
      int head = 0;
      int side = nb[start][0] ? 0 : 1;
      bool cycle = false;
      for (int v = start, s = side;;) {
        int w = nb[v][s];
        if (w == 0) { head = v; break; }
        v = w;
        s ^= 1;
        if (v == start && s == side) { cycle = true; break; }
      }
      if (cycle) {
        comp.is_cycle = true;
        for (int v = start, s = side;;) {
          comp.vertices.push_back(v);
          v = nb[v][s];
          s ^= 1;
          if (v == start && s == side) break;
        }
      } else {
        comp.is_cycle = false;
        int v = head;
        int s = nb[head][0] ? 0 : 1;
        comp.vertices.push_back(v);
        while (nb[v][s]) {
          v = nb[v][s];
          comp.vertices.push_back(v);
          s ^= 1;
        }
      }
    }
    for (int v : comp.vertices) seen[v] = 1;

    if (g.has_mirror) {
      std::set<int> verts(comp.vertices.begin(), comp.vertices.end());
      comp.sigma_stable = std::all_of(verts.begin(), verts.end(),
                                      [&](int v) { return verts.count(g.sigma(v)) > 0; });
    }
    if (!crossing_arcs.empty()) {
      std::set<int> verts(comp.vertices.begin(), comp.vertices.end());
      for (const Arc& e : crossing_arcs)
        if (verts.count(e.first) && verts.count(e.second)) comp.strange = true;
    }
    out.components.push_back(std::move(comp));
  }

  ComponentSummary& s = out.summary;
  int strange_cycles = 0, strange_segments = 0;
  for (const GraphComponent& c : out.components) {
    if (c.is_cycle) {
      ++s.cycles;
      if (c.strange) ++strange_cycles;
    } else {
      ++s.segments;
      if (c.sigma_stable) ++s.sigma_stable_segments;
      if (c.strange) ++strange_segments;
    }
  }
  if (g.crossing) {
    if (strange_cycles == 1 && strange_segments == 0) {
      s.strange = StrangeKind::Cycle;
    } else if (strange_cycles == 0 && strange_segments == 2) {
      s.strange = StrangeKind::SegmentPair;
    } else {
      throw std::logic_error("crossing graph must have one strange cycle or two strange segments");
    }
  }
  if (g.has_mirror) {
    for (const Arc& e : g.arcs_below) s.m_a += is_central(g, e) ? 1 : 0;
    for (const Arc& e : g.arcs_above) s.m_b += is_central(g, e) ? 1 : 0;
    if (!g.crossing && ((s.m_a == 0) != (s.m_b == 0))) {
      // Without a crossing the central arcs on one side are the nested
      // sigma-stable family (i, V+1-i), so the innermost is the arc joining
      // the two central vertices.
      const auto& arcs = s.m_a > 0 ? g.arcs_below : g.arcs_above;
      const Arc* innermost = nullptr;
      for (const Arc& e : arcs)
        if (is_central(g, e) && (!innermost || e.second - e.first < innermost->second - innermost->first))
          innermost = &e;
      assert(innermost && innermost->second - innermost->first == 1);
      for (const GraphComponent& c : out.components) {
        if (std::find(c.vertices.begin(), c.vertices.end(), innermost->first) != c.vertices.end()) {
          s.central_innermost_in_segment = !c.is_cycle;
          break;
        }
      }
    }
  }
  return out;
}

namespace {

// Index of the prefix of `a` summing to m, or -1.
int prefix_length(const Composition& a, int m) {
  int sum = 0;
  if (m == 0) return 0;
  for (int i = 0; i < a.size(); ++i) {
    sum += a[i];
    if (sum == m) return i + 1;
    if (sum > m) return -1;
  }
  return -1;
}

Composition slice(const Composition& a, int from, int to) {
  std::vector<int> parts(a.parts().begin() + from, a.parts().begin() + to);
  return Composition(std::move(parts));
}

}  // namespace

std::vector<int> split_points(const SeaweedSpec& spec) {
  std::vector<int> out;
  if (spec.type != AlgebraType::D) return out;
  for (int m = 1; m <= spec.n; ++m) {
    if (m != spec.n && m > spec.n - 2) continue;
    if (prefix_length(spec.a, m) >= 0 && prefix_length(spec.b, m) >= 0) out.push_back(m);
  }
  return out;
}

ThreePieceSplit split_three_pieces(const SeaweedSpec& spec, int m) {
  if (spec.type != AlgebraType::D) throw std::invalid_argument("three-piece split applies to type D");
  if (m < 1 || (m > spec.n - 2 && m != spec.n))
    throw std::invalid_argument("split point must satisfy m <= n-2 or m = n");
  int ka = prefix_length(spec.a, m);
  int kb = prefix_length(spec.b, m);
  if (ka < 0 || kb < 0)
    throw std::invalid_argument("not splittable: no common prefix sum " + std::to_string(m));
  ThreePieceSplit out{
      .left = SeaweedSpec::make_A(m, slice(spec.a, 0, ka), slice(spec.b, 0, kb)),
      .center = std::nullopt,
      .right = SeaweedSpec::make_A(m, slice(spec.a, 0, ka).reversed(), slice(spec.b, 0, kb).reversed()),
  };
  if (m < spec.n)
    out.center = SeaweedSpec::make_D(spec.n - m, slice(spec.a, ka, spec.a.size()),
                                     slice(spec.b, kb, spec.b.size()), spec.crossing);
  return out;
}

}  // namespace meander
