#pragma once

#include <string>
#include <vector>

#include "meander/index.hpp"
#include "meander/seaweed.hpp"

namespace meander {

enum class ReductionRule {
  TerminalParabolic,
  StripEqualHead,
  RewriteSmallHead,
  RewriteLargeHead,
  RewriteSmallHeadMirror,
  RewriteLargeHeadMirror,
  CentralSwap,
  TerminalQEc,
  TerminalZero,
};

bool is_terminal_rule(ReductionRule r);
// Kebab-case name, e.g. "strip-equal-head".
std::string reduction_rule_name(ReductionRule r);

// A type-D spec together with the geometric side its crossing currently sits
// on. Rewrites contract arcs near the boundary and never move the crossing,
// so mid-trace the crossing can sit opposite the smaller last part; the
// central-swap step then moves it (or dissolves it when the destination last
// part is 1). `side` is meaningful only while spec.crossing holds.
struct ReductionState {
  SeaweedSpec spec;
  CrossingSide side = CrossingSide::Below;

  static ReductionState initial(const SeaweedSpec& spec);
  bool wrong_side() const;
  MeanderGraph graph() const;
  IndexReport index() const;
  std::string to_string() const;  // "q_5(2,3|1,4)_c"; the zero algebra is "0"

  bool operator==(const ReductionState&) const = default;
};

struct ReductionStep {
  ReductionRule rule = ReductionRule::TerminalZero;
  int index_delta = 0;
  ReductionState successor;  // unset when the rule is terminal
};

struct ReductionTrace {
  ReductionState initial;
  std::vector<ReductionStep> steps;  // the non-terminal steps, in order
  ReductionRule terminal_rule = ReductionRule::TerminalZero;
  ReductionState terminal_state;
  int terminal_index = 0;
  int total_index = 0;  // sum of deltas + terminal_index

  // All states visited, initial first, terminal last.
  std::vector<ReductionState> states() const;
};

// One move of the inductive procedure. Rule priority: zero algebra; misplaced
// crossing (central-swap); q_ec terminal (crossing with single parts); empty
// side (parabolic); equal heads (strip, delta a_1); otherwise the head
// rewrite on the side with the smaller first part, using the small-head form
// when twice that head fits into the other (ties between the two forms take
// the small-head form; they agree after zero parts are dropped).
ReductionStep reduce_step(const ReductionState& state);

ReductionTrace reduce_trace(const SeaweedSpec& spec);

// Closed form for the index of the parabolic q_n(a|emptyset) (equivalently
// q_n(emptyset|a)); requires |a| <= n and |a| != n-1. With d = n - |a| and
// k = sum(floor(a_i / 2)) + d:
//   n even: k when d is even, k-1 when d is odd;
//   n odd:  k when d is odd, k+1 when d = 0 and a ends in 1, else k-1.
int parabolic_index_closed_form(const Composition& a, int n);

// ind q_ec(m) = m - 2 (m >= 2), the extreme crossing case a = b = (m).
int q_ec_index(int m);

}  // namespace meander
