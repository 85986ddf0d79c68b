#include "meander/frobenius.hpp"

#include <set>
#include <stdexcept>

namespace meander {

CrossingFrobeniusVerdict frobenius_crossing_criterion(const SeaweedSpec& spec) {
  if (spec.type != AlgebraType::D || !spec.crossing)
    throw std::invalid_argument("criterion applies to crossing type D specs");
  ComponentAnalysis an = analyze_components(build_meander_D(spec));
  if (an.summary.strange == StrangeKind::SegmentPair)
    return CrossingFrobeniusVerdict::NotFrobeniusTwoStrangeSegments;
  if (an.components.size() == 1) {
    if (spec.n % 2 != 0) throw std::logic_error("single strange cycle forces even n");
    return CrossingFrobeniusVerdict::FrobeniusSingleCycle;
  }
  return CrossingFrobeniusVerdict::NotFrobeniusExtraComponents;
}

bool mrs_gl2_bijection_check(const Composition& a, const Composition& b, int n) {
  if (a.sum() != n || b.sum() != n || a.empty() || b.empty() || a.last() < 2 || b.last() < 2)
    throw std::invalid_argument("expected |a| = |b| = n with both last parts >= 2");
  ComponentAnalysis plain = analyze_components(build_meander_A(a, b));
  bool plain_single_cycle = plain.components.size() == 1 && plain.components[0].is_cycle;
  SeaweedSpec crossed = SeaweedSpec::make_D(n, a, b, true);
  bool crossed_single_cycle =
      frobenius_crossing_criterion(crossed) == CrossingFrobeniusVerdict::FrobeniusSingleCycle;
  if (plain_single_cycle != crossed_single_cycle)
    throw std::logic_error("crossing graph and its reverted companion disagree on the single cycle");
  return plain_single_cycle;
}

NoCrossingFrobeniusVerdict frobenius_no_crossing_criteria(const SeaweedSpec& spec) {
  if (spec.type != AlgebraType::D || spec.crossing)
    throw std::invalid_argument("criteria apply to non-crossing type D specs");
  MeanderGraph g = build_meander_D(spec);
  ComponentAnalysis an = analyze_components(g);
  const ComponentSummary& s = an.summary;

  NoCrossingFrobeniusVerdict v;
  v.epsilon = epsilon_D(g, s);
  int nss = s.segments - s.sigma_stable_segments;
  int index = s.cycles + nss / 2 + v.epsilon;

  if (v.epsilon == 1) {
    v.frobenius = false;
  } else if (v.epsilon == 0) {
    // Same graph, type C reading: ind_C = cycles + nss/2 = ind_D here.
    v.type_c_index = index_BC(spec.a, spec.b, spec.n);
    v.central_arcs = s.m_a + s.m_b;
    v.frobenius = *v.type_c_index == 0;
    if (v.frobenius && *v.central_arcs % 2 != 0)
      throw std::logic_error("Frobenius case with epsilon 0 must have evenly many central arcs");
  } else {
    // epsilon = -1: Frobenius iff the central arcs are odd-many on one side,
    // the central pair of vertices lies on the unique cycle, and every
    // segment is sigma-stable.
    v.odd_central_one_side = ((s.m_a == 0) != (s.m_b == 0)) && std::max(s.m_a, s.m_b) % 2 == 1;
    bool one_cycle_center = false;
    if (s.cycles == 1) {
      for (const GraphComponent& c : an.components)
        if (c.is_cycle) {
          std::set<int> verts(c.vertices.begin(), c.vertices.end());
          one_cycle_center = verts.count(spec.n) > 0 && verts.count(spec.n + 1) > 0;
        }
    }
    v.single_cycle_through_center = one_cycle_center;
    v.no_nonstable_segments = nss == 0;
    v.frobenius = *v.odd_central_one_side && *v.single_cycle_through_center && *v.no_nonstable_segments;
  }
  if (v.frobenius != (index == 0))
    throw std::logic_error("structural Frobenius criteria disagree with the index formula");
  return v;
}

EnumerationStats enumerate_seaweeds(int n, bool frobenius_only,
                                    const std::function<bool(const EnumerationRecord&)>& visit) {
  if (n < 1 || n > 15) throw std::invalid_argument("enumeration supports 1 <= n <= 15");
  EnumerationStats stats;
  std::set<std::tuple<std::vector<int>, std::vector<int>, bool>> distinct;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t sm = 0; sm < count; ++sm) {
    RootSubset S(n, sm);
    for (std::uint64_t tm = 0; tm < count; ++tm) {
      RootSubset T(n, tm);
      SeaweedSpec spec = canonicalize_seaweed_D(n, S, T);
      IndexReport report = index_D(spec);
      distinct.insert({spec.a.parts(), spec.b.parts(), spec.crossing});
      EnumerationRecord rec;
      rec.n = n;
      rec.s_mask = sm;
      rec.t_mask = tm;
      rec.crossing = spec.crossing;
      rec.index = report.index;
      rec.epsilon = report.epsilon;
      rec.cycles = report.summary.cycles;
      rec.segments = report.summary.segments;
      rec.sigma_stable_segments = report.summary.sigma_stable_segments;
      rec.frobenius = report.index == 0;
      ++stats.records;
      if (rec.frobenius) ++stats.frobenius;
      if (rec.crossing) ++stats.crossing;
      if (frobenius_only && !rec.frobenius) continue;
      if (!visit(rec)) {
        stats.distinct_specs = static_cast<long long>(distinct.size());
        return stats;
      }
    }
  }
  stats.distinct_specs = static_cast<long long>(distinct.size());
  return stats;
}

std::vector<EnumerationRecord> enumerate_seaweeds(int n, bool frobenius_only) {
  std::vector<EnumerationRecord> out;
  enumerate_seaweeds(n, frobenius_only, [&](const EnumerationRecord& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

}  // namespace meander
