#include <doctest.h>

#include <stdexcept>

#include "meander/index.hpp"
#include "meander/reduction.hpp"

using namespace meander;

TEST_CASE("worked reduction of q_5(2,3|1,4)_c") {
  SeaweedSpec start = SeaweedSpec::make_D(5, Composition{2, 3}, Composition{1, 4}, true);
  ReductionTrace tr = reduce_trace(start);

  REQUIRE(tr.steps.size() == 6);
  CHECK(tr.steps[0].rule == ReductionRule::RewriteSmallHeadMirror);
  CHECK(tr.steps[1].rule == ReductionRule::RewriteSmallHead);
  CHECK(tr.steps[2].rule == ReductionRule::CentralSwap);
  CHECK(tr.steps[3].rule == ReductionRule::RewriteLargeHeadMirror);
  CHECK(tr.steps[4].rule == ReductionRule::RewriteSmallHeadMirror);
  CHECK(tr.steps[5].rule == ReductionRule::StripEqualHead);

  CHECK(tr.steps[0].successor.spec.to_string() == "q_4(1,3|4)_c");
  CHECK(tr.steps[1].successor.spec.to_string() == "q_3(3|2,1)_c");
  CHECK(tr.steps[2].successor.spec.to_string() == "q_3(3|2,1)");
  CHECK(tr.steps[3].successor.spec.to_string() == "q_2(2|1,1)");
  CHECK(tr.steps[4].successor.spec.to_string() == "q_1(1|1)");
  CHECK(tr.steps[5].successor.to_string() == "0");

  CHECK(tr.terminal_rule == ReductionRule::TerminalZero);
  CHECK(tr.terminal_index == 0);
  CHECK(tr.steps[5].index_delta == 1);
  for (int i = 0; i < 5; ++i) CHECK(tr.steps[i].index_delta == 0);
  CHECK(tr.total_index == 1);

  // each intermediate state evaluates to the remaining index
  int remaining = tr.total_index;
  for (const auto& step : tr.steps) {
    remaining -= step.index_delta;
    if (step.successor.spec.n > 0) CHECK(step.successor.index().index == remaining);
  }
}

TEST_CASE("the wrong-side state in the worked example is geometric, not notational") {
  // after two rewrites the crossing sits below but the smaller last part is above
  SeaweedSpec start = SeaweedSpec::make_D(5, Composition{2, 3}, Composition{1, 4}, true);
  ReductionTrace tr = reduce_trace(start);
  const ReductionState& wrong = tr.steps[1].successor;
  CHECK(wrong.spec.crossing);
  CHECK(wrong.side == CrossingSide::Below);
  CHECK(wrong.spec.b.last() == 1);  // make_D would reject this; raw state carries it
  CHECK(wrong.wrong_side());
}

TEST_CASE("central swap dissolves the crossing when the destination block is trivial") {
  // q_3(3|2,1)_c with the crossing below: swapping to above meets last part 1 -> plain q_3(3|2,1)
  ReductionState s{SeaweedSpec{AlgebraType::D, 3, Composition{3}, Composition{2, 1}, true},
                   CrossingSide::Below};
  ReductionStep step = reduce_step(s);
  CHECK(step.rule == ReductionRule::CentralSwap);
  CHECK(!step.successor.spec.crossing);
  CHECK(step.successor.spec.to_string() == "q_3(3|2,1)");
}

TEST_CASE("central swap keeps the crossing when the destination block is wide") {
  // q_4(4|1,3)_c with the crossing below sits on the wrong side (1,3 ends smaller)
  ReductionState s{SeaweedSpec{AlgebraType::D, 4, Composition{4}, Composition{1, 3}, true},
                   CrossingSide::Below};
  CHECK(s.wrong_side());
  ReductionStep step = reduce_step(s);
  CHECK(step.rule == ReductionRule::CentralSwap);
  CHECK(step.successor.spec.crossing);
  CHECK(step.successor.side == CrossingSide::Above);
  CHECK(step.successor.index().index == s.index().index);
}

TEST_CASE("terminal rules") {
  // parabolic: one side empty
  ReductionTrace p = reduce_trace(SeaweedSpec::make_D(5, Composition{2, 2, 1}, Composition{}, false));
  CHECK(p.terminal_rule == ReductionRule::TerminalParabolic);
  CHECK(p.total_index == index_of_spec(SeaweedSpec::make_D(5, Composition{2, 2, 1}, Composition{}, false)).index);

  // q_ec: crossing with singleton compositions on both sides
  ReductionTrace e = reduce_trace(SeaweedSpec::make_D(5, Composition{5}, Composition{5}, true));
  CHECK(e.terminal_rule == ReductionRule::TerminalQEc);
  CHECK(e.terminal_index == 3);
  CHECK(e.total_index == 3);

  // zero
  ReductionTrace z = reduce_trace(SeaweedSpec::make_D(3, Composition{3}, Composition{3}, false));
  CHECK(z.terminal_rule == ReductionRule::TerminalZero);
  CHECK(z.total_index == 3);
}

TEST_CASE("strip-equal-head accounts for the dropped block") {
  ReductionTrace tr = reduce_trace(SeaweedSpec::make_D(6, Composition{4, 2}, Composition{4, 1, 1}, false));
  REQUIRE(!tr.steps.empty());
  CHECK(tr.steps[0].rule == ReductionRule::StripEqualHead);
  CHECK(tr.steps[0].index_delta == 4);
  CHECK(tr.steps[0].successor.spec.n == 2);
  CHECK(tr.total_index ==
        index_of_spec(SeaweedSpec::make_D(6, Composition{4, 2}, Composition{4, 1, 1}, false)).index);
}

TEST_CASE("head rewrites preserve the index") {
  for (auto spec : {SeaweedSpec::make_D(7, Composition{2, 5}, Composition{3, 2, 2}, false),
                    SeaweedSpec::make_D(7, Composition{5, 2}, Composition{2, 2, 3}, false),
                    SeaweedSpec::make_D(6, Composition{2, 4}, Composition{6}, true),
                    SeaweedSpec::make_D(8, Composition{3, 5}, Composition{2, 6}, true)}) {
    ReductionTrace tr = reduce_trace(spec);
    CHECK(tr.total_index == index_of_spec(spec).index);
    int acc = tr.terminal_index;
    for (auto it = tr.steps.rbegin(); it != tr.steps.rend(); ++it) acc += it->index_delta;
    CHECK(acc == tr.total_index);
  }
}

TEST_CASE("reduction agrees with the graph index everywhere small") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t sm = 0; sm < (std::uint64_t{1} << n); ++sm)
      for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << n); ++tm) {
        SeaweedSpec spec = canonicalize_seaweed_D(n, RootSubset(n, sm), RootSubset(n, tm));
        CHECK(reduce_trace(spec).total_index == index_of_spec(spec).index);
      }
}

TEST_CASE("parabolic closed form") {
  // d = 0 cases split on the last part
  CHECK(parabolic_index_closed_form(Composition{2, 2, 1}, 5) == 3);  // k=2, a ends in 1 -> k+1
  CHECK(parabolic_index_closed_form(Composition{2, 3}, 5) == 1);     // k=2, a ends in 3 -> k-1
  CHECK(parabolic_index_closed_form(Composition{5}, 5) == 1);
  // d > 0, n even
  CHECK(parabolic_index_closed_form(Composition{2}, 4) == 3);  // d=2 even, k=1+2
  CHECK(parabolic_index_closed_form(Composition{1}, 4) == 2);  // d=3 odd, k=3 -> k-1
  // d > 0, n odd
  CHECK(parabolic_index_closed_form(Composition{2}, 5) == 4);  // d=3 odd, k=1+3
  CHECK(parabolic_index_closed_form(Composition{2, 1}, 5) == 2);  // d=2 even, k=3 -> k-1
  CHECK_THROWS_AS(parabolic_index_closed_form(Composition{4}, 5), std::invalid_argument);
  // verify against the graph for every composition with |a| <= n <= 9
  for (int n = 1; n <= 9; ++n) {
    // enumerate all compositions of m <= n with the excluded-sum rule applied
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
      parts.push_back(cur);
      for (int p = 1; p <= remaining; ++p) {
        cur.push_back(p);
        self(self, remaining - p);
        cur.pop_back();
      }
    };
    rec(rec, n);
    for (const auto& v : parts) {
      Composition a(v);
      if (static_cast<int>(a.sum()) == n - 1) continue;  // excluded sum
      SeaweedSpec spec = SeaweedSpec::make_D(n, a, Composition{}, false);
      CHECK(parabolic_index_closed_form(a, n) == index_of_spec(spec).index);
    }
  }
}

TEST_CASE("extremal crossing index closed form") {
  CHECK_THROWS_AS(q_ec_index(1), std::invalid_argument);
  for (int m = 2; m <= 10; ++m) {
    CHECK(q_ec_index(m) == m - 2);
    SeaweedSpec spec = SeaweedSpec::make_D(m, Composition{m}, Composition{m}, true);
    IndexReport r = index_of_spec(spec);
    CHECK(r.index == m - 2);
    CHECK(r.epsilon == -1);
    if (m % 2 == 0) {
      CHECK(r.summary.cycles == m - 1);
      CHECK(r.summary.segments == 0);
    } else {
      CHECK(r.summary.cycles == m - 2);
      CHECK(r.summary.segments == 2);
      CHECK(r.summary.sigma_stable_segments == 0);
    }
    CHECK(reduce_trace(spec).total_index == m - 2);
  }
}

TEST_CASE("step budget is generous enough for deep chains") {
  // long alternating compositions force many rewrites
  SeaweedSpec spec = SeaweedSpec::make_D(
      12, Composition{1, 2, 1, 2, 1, 2, 1, 2}, Composition{3, 3, 3, 3}, false);
  ReductionTrace tr = reduce_trace(spec);
  CHECK(tr.total_index == index_of_spec(spec).index);
}

TEST_CASE("rule names are stable identifiers") {
  CHECK(reduction_rule_name(ReductionRule::RewriteSmallHead) == std::string("rewrite-small-head"));
  CHECK(reduction_rule_name(ReductionRule::RewriteLargeHeadMirror) == std::string("rewrite-large-head-mirror"));
  CHECK(reduction_rule_name(ReductionRule::CentralSwap) == std::string("central-swap"));
  CHECK(reduction_rule_name(ReductionRule::TerminalQEc) == std::string("terminal-q_ec"));
  CHECK(is_terminal_rule(ReductionRule::TerminalZero));
  CHECK(!is_terminal_rule(ReductionRule::StripEqualHead));
}
