#include "meander/reduction.hpp"

#include <stdexcept>

namespace meander {

bool is_terminal_rule(ReductionRule r) {
  return r == ReductionRule::TerminalParabolic || r == ReductionRule::TerminalQEc ||
         r == ReductionRule::TerminalZero;
}

std::string reduction_rule_name(ReductionRule r) {
  switch (r) {
    case ReductionRule::TerminalParabolic: return "terminal-parabolic";
    case ReductionRule::StripEqualHead: return "strip-equal-head";
    case ReductionRule::RewriteSmallHead: return "rewrite-small-head";
    case ReductionRule::RewriteLargeHead: return "rewrite-large-head";
    case ReductionRule::RewriteSmallHeadMirror: return "rewrite-small-head-mirror";
    case ReductionRule::RewriteLargeHeadMirror: return "rewrite-large-head-mirror";
    case ReductionRule::CentralSwap: return "central-swap";
    case ReductionRule::TerminalQEc: return "terminal-q_ec";
    case ReductionRule::TerminalZero: return "terminal-zero";
  }
  throw std::logic_error("bad reduction rule");
}

ReductionState ReductionState::initial(const SeaweedSpec& spec) {
  if (spec.type != AlgebraType::D) throw std::invalid_argument("reduction applies to type D specs");
  ReductionState st{spec, CrossingSide::Below};
  if (spec.crossing && spec.a.last() > spec.b.last()) st.side = CrossingSide::Above;
  return st;
}

bool ReductionState::wrong_side() const {
  if (!spec.crossing) return false;
  if (side == CrossingSide::Below) return spec.a.last() > spec.b.last();
  return spec.b.last() > spec.a.last();
}

MeanderGraph ReductionState::graph() const {
  return spec.crossing ? build_meander_D_sided(spec, side) : build_meander_D(spec);
}

IndexReport ReductionState::index() const { return index_D_of_graph(graph()); }

std::string ReductionState::to_string() const {
  if (spec.n == 0) return "0";
  return spec.to_string();
}

std::vector<ReductionState> ReductionTrace::states() const {
  std::vector<ReductionState> out{initial};
  for (const ReductionStep& s : steps) out.push_back(s.successor);
  return out;
}

namespace {

// Bypasses SeaweedSpec::make_D: mid-trace crossing states may carry a last
// part 1 on the non-crossing side, which the canonical constructor rejects.
ReductionState raw_state(int n, Composition a, Composition b, bool crossing, CrossingSide side) {
  return ReductionState{SeaweedSpec{AlgebraType::D, n, std::move(a), std::move(b), crossing}, side};
}

ReductionStep rewrite(const ReductionState& st) {
  const SeaweedSpec& q = st.spec;
  const bool mirrored = q.a.first() > q.b.first();
  // View the compositions so that x has the strictly smaller first part.
  const Composition& x = mirrored ? q.b : q.a;
  const Composition& y = mirrored ? q.a : q.b;
  int x1 = x.first(), y1 = y.first();
  ReductionStep step;
  Composition nx, ny;
  int nn;
  if (2 * x1 <= y1) {
    // q_{n-x1}(x_2,... | y_1 - 2 x_1, x_1, y_2, ...)
    step.rule = mirrored ? ReductionRule::RewriteSmallHeadMirror : ReductionRule::RewriteSmallHead;
    nn = q.n - x1;
    nx = x.tail();
    ny = y.tail().with_head(x1).with_head(y1 - 2 * x1);
  } else {
    // q_{n-y1+x1}(2 x_1 - y_1, x_2, ... | x_1, y_2, ...)
    step.rule = mirrored ? ReductionRule::RewriteLargeHeadMirror : ReductionRule::RewriteLargeHead;
    nn = q.n - y1 + x1;
    nx = x.tail().with_head(2 * x1 - y1);
    ny = y.tail().with_head(x1);
  }
  step.index_delta = 0;
  step.successor = mirrored ? raw_state(nn, ny, nx, q.crossing, st.side)
                            : raw_state(nn, nx, ny, q.crossing, st.side);
  return step;
}

}  // namespace

ReductionStep reduce_step(const ReductionState& state) {
  const SeaweedSpec& q = state.spec;
  if (q.type != AlgebraType::D) throw std::invalid_argument("reduction applies to type D specs");

  if (q.n == 0) return ReductionStep{ReductionRule::TerminalZero, 0, state};

  if (state.wrong_side()) {
    // Permuting the two central vertices moves the crossing to the side of
    // the smaller last part; with last part 1 there is no arc to alter there
    // and the crossing dissolves.
    CrossingSide dest = state.side == CrossingSide::Below ? CrossingSide::Above : CrossingSide::Below;
    int dest_last = dest == CrossingSide::Below ? q.a.last() : q.b.last();
    ReductionStep step;
    step.rule = ReductionRule::CentralSwap;
    step.index_delta = 0;
    step.successor = dest_last == 1 ? raw_state(q.n, q.a, q.b, false, CrossingSide::Below)
                                    : raw_state(q.n, q.a, q.b, true, dest);
    return step;
  }

  if (q.crossing && q.a.size() == 1 && q.b.size() == 1)
    return ReductionStep{ReductionRule::TerminalQEc, 0, state};

  if (q.a.empty() || q.b.empty())
    return ReductionStep{ReductionRule::TerminalParabolic, 0, state};

  if (q.a.first() == q.b.first()) {
    int h = q.a.first();
    ReductionStep step;
    step.rule = ReductionRule::StripEqualHead;
    step.index_delta = h;
    step.successor = raw_state(q.n - h, q.a.tail(), q.b.tail(), q.crossing, state.side);
    return step;
  }

  return rewrite(state);
}

ReductionTrace reduce_trace(const SeaweedSpec& spec) {
  ReductionTrace trace;
  trace.initial = ReductionState::initial(spec);
  ReductionState state = trace.initial;
  const int budget = 4 * (spec.n + spec.a.size() + spec.b.size()) + 8;
  for (int i = 0; i <= budget; ++i) {
    ReductionStep step = reduce_step(state);
    if (is_terminal_rule(step.rule)) {
      trace.terminal_rule = step.rule;
      trace.terminal_state = state;
      switch (step.rule) {
        case ReductionRule::TerminalZero: trace.terminal_index = 0; break;
        case ReductionRule::TerminalQEc: trace.terminal_index = q_ec_index(state.spec.n); break;
        case ReductionRule::TerminalParabolic:
          trace.terminal_index = parabolic_index_closed_form(
              state.spec.a.empty() ? state.spec.b : state.spec.a, state.spec.n);
          break;
        default: throw std::logic_error("unexpected terminal rule");
      }
      trace.total_index = trace.terminal_index;
      for (const ReductionStep& s : trace.steps) trace.total_index += s.index_delta;
      return trace;
    }
    trace.steps.push_back(step);
    state = step.successor;
  }
  throw std::logic_error("reduction exceeded its step budget for " + spec.to_string());
}

int parabolic_index_closed_form(const Composition& a, int n) {
  int m = a.sum();
  if (m > n || m == n - 1)
    throw std::invalid_argument("parabolic composition sum must be <= n-2 or exactly n");
  int d = n - m;
  int k = d;
  for (int p : a.parts()) k += p / 2;
  if (n % 2 == 0) return d % 2 == 0 ? k : k - 1;
  if (d % 2 == 1) return k;
  if (d == 0) return a.last() == 1 ? k + 1 : k - 1;
  return k - 1;
}

int q_ec_index(int m) {
  if (m < 2) throw std::invalid_argument("q_ec needs m >= 2");
  return m - 2;
}

}  // namespace meander
