#include "meander/index.hpp"

#include <algorithm>
#include <stdexcept>

namespace meander {

int index_A(const Composition& a, const Composition& b, TypeAFlavor flavor) {
  ComponentSummary s = analyze_components(build_meander_A(a, b)).summary;
  int gl = 2 * s.cycles + s.segments;
  return flavor == TypeAFlavor::GL ? gl : gl - 1;
}

namespace {

int half_nonstable_segments(const ComponentSummary& s) {
  int nss = s.segments - s.sigma_stable_segments;
  if (nss % 2 != 0) throw std::logic_error("non-sigma-stable segments must pair up under sigma");
  return nss / 2;
}

}  // namespace

int index_BC(const Composition& a, const Composition& b, int n) {
  ComponentSummary s = analyze_components(build_meander_C(a, b, n)).summary;
  return s.cycles + half_nonstable_segments(s);
}

int epsilon_D(const MeanderGraph& g, const ComponentSummary& summary) {
  if (!g.has_mirror) throw std::invalid_argument("epsilon applies to mirror graphs");
  if (g.crossing)
    return summary.strange == StrangeKind::Cycle ? -1 : 0;
  int hi = std::max(summary.m_a, summary.m_b);
  int lo = std::min(summary.m_a, summary.m_b);
  if ((hi - lo) % 2 == 0) return 0;
  if (hi % 2 == 1 && lo == 0 && summary.central_innermost_in_segment.value_or(false)) return 1;
  return -1;
}

IndexReport index_D_of_graph(const MeanderGraph& g) {
  ComponentAnalysis an = analyze_components(g);
  IndexReport r;
  r.summary = an.summary;
  r.epsilon = epsilon_D(g, an.summary);
  r.index = an.summary.cycles + half_nonstable_segments(an.summary) + r.epsilon;
  if (r.index < 0) throw std::logic_error("negative index");
  return r;
}

IndexReport index_D(const SeaweedSpec& spec) {
  if (spec.type != AlgebraType::D) throw std::invalid_argument("expected a type D spec");
  return index_D_of_graph(build_meander_D(spec));
}

IndexReport index_of_spec(const SeaweedSpec& spec) {
  switch (spec.type) {
    case AlgebraType::A: {
      IndexReport r;
      ComponentAnalysis an = analyze_components(build_meander_A(spec.a, spec.b));
      r.summary = an.summary;
      r.index = 2 * an.summary.cycles + an.summary.segments;
      return r;
    }
    case AlgebraType::B:
    case AlgebraType::C: {
      IndexReport r;
      ComponentAnalysis an = analyze_components(build_meander(spec));
      r.summary = an.summary;
      r.index = an.summary.cycles + half_nonstable_segments(an.summary);
      return r;
    }
    case AlgebraType::D: return index_D(spec);
  }
  throw std::logic_error("bad algebra type");
}

}  // namespace meander
