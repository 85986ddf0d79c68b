#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "meander/graph_document.hpp"
#include "meander/index.hpp"
#include "meander/reduction.hpp"

using namespace meander;

namespace {

// Deterministic random spec stream shared by the properties below.
struct SpecGen {
  std::mt19937_64 rng{20240815};

  int uniform(int lo, int hi) {
    return static_cast<int>(std::uniform_int_distribution<>(lo, hi)(rng));
  }

  Composition composition(int total) {
    std::vector<int> parts;
    while (total > 0) {
      int p = uniform(1, total);
      parts.push_back(p);
      total -= p;
    }
    return Composition(parts);
  }

  SeaweedSpec next() {
    int n = uniform(1, 12);
    switch (uniform(0, 3)) {
      case 0: return SeaweedSpec::make_A(n, composition(n), composition(n));
      case 1: return SeaweedSpec::make_B(n, composition(uniform(0, n)), composition(uniform(0, n)));
      case 2: return SeaweedSpec::make_C(n, composition(uniform(0, n)), composition(uniform(0, n)));
      default: {
        if (n >= 2 && uniform(0, 3) == 0) {
          // crossing: both sums n, both last parts >= 2
          for (;;) {
            Composition a = composition(n), b = composition(n);
            if (a.last() >= 2 && b.last() >= 2)
              return SeaweedSpec::make_D(n, a, b, true);
          }
        }
        auto pick = [&]() {
          int m = uniform(0, n);
          if (m == n - 1) m = n;
          return composition(m);
        };
        return SeaweedSpec::make_D(n, pick(), pick(), false);
      }
    }
  }
};

int degree(const std::vector<Arc>& arcs, int v) {
  int d = 0;
  for (auto [x, y] : arcs) d += (x == v) + (y == v);
  return d;
}

std::set<Arc> arc_set(const std::vector<Arc>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("graph structure invariants over random specs") {
  SpecGen gen;
  for (int trial = 0; trial < 3000; ++trial) {
    SeaweedSpec spec = gen.next();
    CAPTURE(spec.to_string());
    MeanderGraph g = build_meander(spec);

    // every vertex meets at most one arc per side, arcs stay in range
    for (const auto* arcs : {&g.arcs_below, &g.arcs_above}) {
      std::set<int> seen;
      for (auto [x, y] : *arcs) {
        CHECK(1 <= x);
        CHECK(x < y);
        CHECK(y <= g.vertex_count);
        CHECK(!seen.count(x));
        CHECK(!seen.count(y));
        seen.insert(x);
        seen.insert(y);
      }
    }
    for (int v = 1; v <= g.vertex_count; ++v) {
      CHECK(degree(g.arcs_below, v) <= 1);
      CHECK(degree(g.arcs_above, v) <= 1);
    }

    if (!g.has_mirror) continue;

    // sigma maps each side's arc set onto itself (in crossing graphs the two
    // crossing arcs are swapped with each other)
    for (const auto* arcs : {&g.arcs_below, &g.arcs_above}) {
      std::set<Arc> have = arc_set(*arcs), mirrored;
      for (auto [x, y] : *arcs)
        mirrored.insert({std::min(g.sigma(x), g.sigma(y)), std::max(g.sigma(x), g.sigma(y))});
      CHECK(have == mirrored);
    }

    if (g.crossing) {
      // exactly one pair of mutually crossing arcs, both straddling the axis
      int crossing_pairs = 0;
      for (const auto* arcs : {&g.arcs_below, &g.arcs_above}) {
        const auto& v = *arcs;
        for (size_t i = 0; i < v.size(); ++i)
          for (size_t j = i + 1; j < v.size(); ++j) {
            auto [a1, b1] = v[i];
            auto [a2, b2] = v[j];
            bool crossed = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
            if (crossed) ++crossing_pairs;
          }
      }
      CHECK(crossing_pairs == 1);
    }
  }
}

TEST_CASE("component partition is exact") {
  SpecGen gen;
  for (int trial = 0; trial < 1500; ++trial) {
    SeaweedSpec spec = gen.next();
    CAPTURE(spec.to_string());
    MeanderGraph g = build_meander(spec);
    ComponentAnalysis an = analyze_components(g);

    std::set<int> all;
    int cycles = 0, segments = 0;
    for (const GraphComponent& c : an.components) {
      (c.is_cycle ? cycles : segments)++;
      for (int v : c.vertices) {
        CHECK(!all.count(v));
        all.insert(v);
      }
      // cycles have every vertex of degree 2
      if (c.is_cycle)
        for (int v : c.vertices) CHECK(degree(g.arcs_below, v) + degree(g.arcs_above, v) == 2);
    }
    CHECK(static_cast<int>(all.size()) == g.vertex_count);
    CHECK(cycles == an.summary.cycles);
    CHECK(segments == an.summary.segments);
  }
}

TEST_CASE("a type B graph is its type C graph plus a fixed point") {
  SpecGen gen;
  for (int trial = 0; trial < 800; ++trial) {
    int n = gen.uniform(1, 10);
    Composition a = gen.composition(gen.uniform(0, n)), b = gen.composition(gen.uniform(0, n));
    MeanderGraph gb = build_meander(SeaweedSpec::make_B(n, a, b));
    MeanderGraph gc = build_meander(SeaweedSpec::make_C(n, a, b));
    CHECK(gb.vertex_count == 2 * n + 1);
    CHECK(gc.vertex_count == 2 * n);

    // the middle vertex n+1 of the B graph has no arcs; dropping it and
    // relabeling v -> v-1 for v > n+1 recovers the C graph
    CHECK(degree(gb.arcs_below, n + 1) + degree(gb.arcs_above, n + 1) == 0);
    auto relabel = [&](const std::vector<Arc>& arcs) {
      std::set<Arc> out;
      for (auto [x, y] : arcs) out.insert({x > n + 1 ? x - 1 : x, y > n + 1 ? y - 1 : y});
      return out;
    };
    CHECK(relabel(gb.arcs_below) == arc_set(gc.arcs_below));
    CHECK(relabel(gb.arcs_above) == arc_set(gc.arcs_above));
    CHECK(index_of_spec(SeaweedSpec::make_B(n, a, b)).index ==
          index_of_spec(SeaweedSpec::make_C(n, a, b)).index);
  }
}

TEST_CASE("swapping the compositions never changes the index") {
  SpecGen gen;
  for (int trial = 0; trial < 1500; ++trial) {
    SeaweedSpec spec = gen.next();
    CAPTURE(spec.to_string());
    IndexReport r = index_of_spec(spec), rs = index_of_spec(spec.swapped());
    CHECK(r.index == rs.index);
    CHECK(r.epsilon == rs.epsilon);
  }
}

TEST_CASE("json round trip is lossless on random documents") {
  SpecGen gen;
  for (int trial = 0; trial < 400; ++trial) {
    SeaweedSpec spec = gen.next();
    CAPTURE(spec.to_string());
    GraphDocument doc = make_graph_document(spec);
    CHECK(decode_graph_document(encode_graph_document(doc)) == doc);
  }
}

TEST_CASE("central arcs count the co-rank on each side") {
  SpecGen gen;
  for (int trial = 0; trial < 1500; ++trial) {
    SeaweedSpec spec = gen.next();
    if (spec.type != AlgebraType::D || spec.crossing) continue;
    CAPTURE(spec.to_string());
    ComponentSummary s = analyze_components(build_meander(spec)).summary;
    CHECK(s.m_a == spec.n - spec.a.sum());
    CHECK(s.m_b == spec.n - spec.b.sum());
  }
}

TEST_CASE("reduction totals match the graph index on random type D specs") {
  SpecGen gen;
  for (int trial = 0; trial < 2000; ++trial) {
    SeaweedSpec spec = gen.next();
    if (spec.type != AlgebraType::D) continue;
    CAPTURE(spec.to_string());
    ReductionTrace tr = reduce_trace(spec);
    CHECK(tr.total_index == index_of_spec(spec).index);
    // the co-ranks n - |a| and n - |b| are preserved until a side empties
    int da = spec.n - spec.a.sum(), db = spec.n - spec.b.sum();
    for (const ReductionStep& st : tr.steps) {
      const SeaweedSpec& q = st.successor.spec;
      if (q.n == 0 || q.a.empty() || q.b.empty()) break;
      CHECK(q.n - q.a.sum() == da);
      CHECK(q.n - q.b.sum() == db);
    }
  }
}

TEST_CASE("indices are never negative and epsilon only appears in type D") {
  SpecGen gen;
  for (int trial = 0; trial < 2000; ++trial) {
    SeaweedSpec spec = gen.next();
    CAPTURE(spec.to_string());
    IndexReport r = index_of_spec(spec);
    CHECK(r.index >= 0);
    if (spec.type == AlgebraType::D) {
      CHECK(r.epsilon >= -1);
      CHECK(r.epsilon <= 1);
    } else {
      CHECK(r.epsilon == 0);
    }
  }
}
