#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "meander/index.hpp"
#include "meander/meander_graph.hpp"
#include "meander/seaweed.hpp"

namespace meander {

// --- crossing seaweeds -------------------------------------------------------

enum class CrossingFrobeniusVerdict {
  FrobeniusSingleCycle,            // index 0: the whole graph is one strange cycle
  NotFrobeniusTwoStrangeSegments,  // strange segment pair: index >= 1
  NotFrobeniusExtraComponents,     // strange cycle plus other components
};

CrossingFrobeniusVerdict frobenius_crossing_criterion(const SeaweedSpec& spec);

// The graph Gamma(a|b) with the crossing reverted is a single type-A cycle
// exactly when the crossing graph is; requires |a| = |b| = n and both last
// parts >= 2. Single-cycle type-A graphs are the gl_2-matched compositions.
bool mrs_gl2_bijection_check(const Composition& a, const Composition& b, int n);

// --- non-crossing seaweeds ---------------------------------------------------

struct NoCrossingFrobeniusVerdict {
  int epsilon = 0;
  bool frobenius = false;
  // epsilon = 0: the same graph read as type C decides the question.
  std::optional<int> type_c_index;
  std::optional<int> central_arcs;  // m_a + m_b, even in the Frobenius case
  // epsilon = -1 clauses:
  std::optional<bool> odd_central_one_side;
  std::optional<bool> single_cycle_through_center;
  std::optional<bool> no_nonstable_segments;
};

NoCrossingFrobeniusVerdict frobenius_no_crossing_criteria(const SeaweedSpec& spec);

// --- exhaustive enumeration ----------------------------------------------------

struct EnumerationRecord {
  int n = 0;
  std::uint64_t s_mask = 0;
  std::uint64_t t_mask = 0;
  bool crossing = false;
  int index = 0;
  int epsilon = 0;
  int cycles = 0;
  int segments = 0;
  int sigma_stable_segments = 0;
  bool frobenius = false;
};

struct EnumerationStats {
  long long records = 0;
  long long frobenius = 0;
  long long crossing = 0;
  long long distinct_specs = 0;  // distinct (a, b, crossing) triples
};

// Visits all 4^n pairs (S, T) of subsets of the simple roots of so_2n, S-mask
// major and T-mask minor; `frobenius_only` keeps index-0 records. The functor
// returns false to stop early.
EnumerationStats enumerate_seaweeds(int n, bool frobenius_only,
                                    const std::function<bool(const EnumerationRecord&)>& visit);

std::vector<EnumerationRecord> enumerate_seaweeds(int n, bool frobenius_only = false);

}  // namespace meander
