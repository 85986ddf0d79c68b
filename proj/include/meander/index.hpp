#pragma once

#include "meander/meander_graph.hpp"
#include "meander/seaweed.hpp"

namespace meander {

enum class TypeAFlavor { GL, SL };

struct IndexReport {
  int index = 0;
  // epsilon is meaningful for type D only; 0 elsewhere.
  int epsilon = 0;
  ComponentSummary summary;
};

// Type A: ind = 2 * cycles + segments in gl; one less in sl.
int index_A(const Composition& a, const Composition& b, TypeAFlavor flavor = TypeAFlavor::GL);

// Types B and C share one formula on the symmetrized graph:
// ind = cycles + (non-sigma-stable segments) / 2.
int index_BC(const Composition& a, const Composition& b, int n);

// Correction term for type D, from the component summary of the type-D graph.
// Crossing graphs: -1 for a strange cycle, 0 for a strange segment pair.
// Otherwise with (hi, lo) = sorted central-arc counts per side: 0 when hi-lo
// is even; +1 when hi is odd, lo = 0 and the arc joining the central vertices
// lies in a segment; -1 in the remaining odd cases.
int epsilon_D(const MeanderGraph& g, const ComponentSummary& summary);

// Type D: ind = cycles + (non-sigma-stable segments) / 2 + epsilon.
IndexReport index_D(const SeaweedSpec& spec);

// Same formula evaluated on an explicit graph (used for reduction states
// whose crossing sits on a forced side).
IndexReport index_D_of_graph(const MeanderGraph& g);

// Dispatch on spec.type; type A reports the gl index.
IndexReport index_of_spec(const SeaweedSpec& spec);

}  // namespace meander
