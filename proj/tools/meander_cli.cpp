// Command-line front end: index, reduce, verify, enumerate, graph.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "meander/cascade.hpp"
#include "meander/frobenius.hpp"
#include "meander/graph_document.hpp"
#include "meander/matrix_oracle.hpp"
#include "meander/reduction.hpp"
#include "meander/render.hpp"

using namespace meander;
using ordered_json = nlohmann::ordered_json;

namespace {

struct SpecOptions {
  std::string type = "D";
  int n = -1;
  std::string a, b, s, t;
  bool a_set = false, b_set = false, s_set = false, t_set = false;
  bool crossing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--type", type, "Algebra type: A, B, C or D")->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd->add_option("--n", n, "Rank parameter (gl_n, so_2n+1, sp_2n, so_2n)")->required();
    cmd->add_option("--a", a, "Composition below, e.g. 2,4,3 (empty string allowed)")
        ->each([this](const std::string&) { a_set = true; });
    cmd->add_option("--b", b, "Composition above")->each([this](const std::string&) { b_set = true; });
    cmd->add_option("--s", s, "Subset of simple roots for the lower parabolic, e.g. 1,3")
        ->each([this](const std::string&) { s_set = true; });
    cmd->add_option("--t", t, "Subset of simple roots for the upper parabolic")
        ->each([this](const std::string&) { t_set = true; });
    cmd->add_flag("--crossing", crossing, "Type D crossing seaweed (composition input only)");
  }

  SeaweedSpec to_spec() const {
    bool by_comp = a_set || b_set;
    bool by_subset = s_set || t_set;
    if (by_comp == by_subset)
      throw std::invalid_argument("give either --a/--b or --s/--t");
    if (by_comp && (!a_set || !b_set))
      throw std::invalid_argument("--a and --b must be given together");
    if (by_subset && (!s_set || !t_set))
      throw std::invalid_argument("--s and --t must be given together");
    if (by_subset && crossing)
      throw std::invalid_argument("--crossing applies to composition input; subsets imply it");
    AlgebraType ty = algebra_type_from_char(type[0]);
    if (crossing && ty != AlgebraType::D)
      throw std::invalid_argument("--crossing applies to type D");
    if (by_comp) {
      Composition ca = Composition::parse(a), cb = Composition::parse(b);
      switch (ty) {
        case AlgebraType::A: return SeaweedSpec::make_A(n, ca, cb);
        case AlgebraType::B: return SeaweedSpec::make_B(n, ca, cb);
        case AlgebraType::C: return SeaweedSpec::make_C(n, ca, cb);
        case AlgebraType::D: return SeaweedSpec::make_D(n, ca, cb, crossing);
      }
    }
    int rank = ty == AlgebraType::A ? n - 1 : n;
    RootSubset S = RootSubset::parse(rank, s), T = RootSubset::parse(rank, t);
    switch (ty) {
      case AlgebraType::A:
        return SeaweedSpec::make_A(n, subset_to_composition_A(n, S), subset_to_composition_A(n, T));
      case AlgebraType::B:
        return SeaweedSpec::make_B(n, subset_to_composition_BC(n, S), subset_to_composition_BC(n, T));
      case AlgebraType::C:
        return SeaweedSpec::make_C(n, subset_to_composition_BC(n, S), subset_to_composition_BC(n, T));
      case AlgebraType::D: return canonicalize_seaweed_D(n, S, T);
    }
    throw std::logic_error("unreachable");
  }
};

ordered_json state_json(const ReductionState& st) {
  ordered_json j;
  j["n"] = st.spec.n;
  j["a"] = st.spec.a.parts();
  j["b"] = st.spec.b.parts();
  j["crossing"] = st.spec.crossing;
  if (st.spec.crossing) j["crossing_side"] = st.side == CrossingSide::Below ? "below" : "above";
  j["notation"] = st.to_string();
  return j;
}

std::string terminal_kind(ReductionRule r) {
  switch (r) {
    case ReductionRule::TerminalParabolic: return "parabolic";
    case ReductionRule::TerminalQEc: return "q_ec";
    case ReductionRule::TerminalZero: return "zero";
    default: throw std::logic_error("not a terminal rule");
  }
}

std::string chain_notation(const ReductionTrace& trace) {
  std::string out = trace.initial.to_string();
  for (const ReductionStep& s : trace.steps) {
    out += s.rule == ReductionRule::CentralSwap ? " ~*> " : " ~> ";
    out += s.successor.to_string();
  }
  if (trace.terminal_rule == ReductionRule::TerminalQEc)
    out += " = q_ec(" + std::to_string(trace.terminal_state.spec.n) + ")";
  return out;
}

int cmd_index(const SpecOptions& opt) {
  GraphDocument doc = make_graph_document(opt.to_spec());
  std::cout << encode_graph_document(doc) << "\n";
  return 0;
}

int cmd_graph(const SpecOptions& opt, const std::string& format) {
  SeaweedSpec spec = opt.to_spec();
  if (format == "ascii") {
    std::cout << render_ascii(spec);
  } else if (format == "svg") {
    std::cout << render_svg(spec);
  } else {
    std::cout << encode_graph_document(make_graph_document(spec)) << "\n";
  }
  return 0;
}

int cmd_reduce(const SpecOptions& opt, bool json_trace) {
  SeaweedSpec spec = opt.to_spec();
  if (spec.type != AlgebraType::D)
    throw std::invalid_argument("reduce applies to type D seaweeds");
  ReductionTrace trace = reduce_trace(spec);
  if (json_trace) {
    ordered_json j;
    j["schema_version"] = "1";
    j["initial"] = state_json(trace.initial);
    ordered_json steps = ordered_json::array();
    for (const ReductionStep& s : trace.steps) {
      ordered_json js;
      js["rule"] = reduction_rule_name(s.rule);
      js["index_delta"] = s.index_delta;
      js["successor"] = state_json(s.successor);
      steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    j["terminal"] = ordered_json{{"kind", terminal_kind(trace.terminal_rule)},
                                 {"state", state_json(trace.terminal_state)},
                                 {"index", trace.terminal_index}};
    j["total_index"] = trace.total_index;
    j["notation"] = chain_notation(trace);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << chain_notation(trace) << "\n";
  int num = 0;
  for (const ReductionStep& s : trace.steps) {
    std::cout << "  step " << ++num << ": " << reduction_rule_name(s.rule) << " -> "
              << s.successor.to_string();
    if (s.index_delta) std::cout << "  (index delta " << s.index_delta << ")";
    std::cout << "\n";
  }
  std::cout << "terminal: " << terminal_kind(trace.terminal_rule) << " "
            << trace.terminal_state.to_string() << " (index " << trace.terminal_index << ")\n";
  std::cout << "total index: " << trace.total_index << "\n";
  return 0;
}

struct OracleSelection {
  bool graph = false, tyj = false, matrix = false;
};

OracleSelection parse_oracles(const std::string& list) {
  OracleSelection sel;
  std::istringstream in(list);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "graph") sel.graph = true;
    else if (tok == "tyj") sel.tyj = true;
    else if (tok == "matrix") sel.matrix = true;
    else throw std::invalid_argument("unknown oracle \"" + tok + "\" (expected graph, tyj, matrix)");
  }
  if (!sel.graph && !sel.tyj && !sel.matrix) throw std::invalid_argument("no oracles selected");
  return sel;
}

int cmd_verify(int n, bool exhaustive, long long samples, const std::string& oracles,
               std::uint64_t seed, int trials) {
  if (n < 1 || n > 30) throw std::invalid_argument("verify needs 1 <= n <= 30");
  OracleSelection sel = parse_oracles(oracles);
  if (static_cast<int>(sel.graph) + static_cast<int>(sel.tyj) + static_cast<int>(sel.matrix) < 2)
    throw std::invalid_argument("verify needs at least two oracles to compare");
  if (!exhaustive && samples <= 0)
    throw std::invalid_argument("give --exhaustive or --samples K");

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  const std::uint64_t space = std::uint64_t{1} << n;
  if (exhaustive) {
    if (n > 8) throw std::invalid_argument("exhaustive verification is limited to n <= 8");
    for (std::uint64_t sm = 0; sm < space; ++sm)
      for (std::uint64_t tm = 0; tm < space; ++tm) pairs.emplace_back(sm, tm);
  } else {
    std::seed_seq sseq{seed, std::uint64_t{0x5eed}};
    std::mt19937_64 rng(sseq);
    for (long long i = 0; i < samples; ++i)
      pairs.emplace_back(rng() & (space - 1), rng() & (space - 1));
  }

  long long gt_ok = 0, gm_ok = 0, tm_ok = 0, mismatches = 0;
  for (const auto& [sm, tm] : pairs) {
    RootSubset S(n, sm), T(n, tm);
    std::optional<int> ig, it, im;
    if (sel.graph) ig = index_D(canonicalize_seaweed_D(n, S, T)).index;
    if (sel.tyj) it = tyj_index(n, AlgebraType::D, S, T);
    if (sel.matrix)
      im = oracle_index(n, S, T, trials, seed * 1000003ULL + ((sm << n) | tm));
    bool ok = true;
    if (ig && it) { ig == it ? ++gt_ok : (ok = false); }
    if (ig && im) { ig == im ? ++gm_ok : (ok = false); }
    if (it && im) { it == im ? ++tm_ok : (ok = false); }
    if (!ok) {
      ++mismatches;
      if (mismatches <= 10) {
        std::cout << "MISMATCH S=" << sm << " T=" << tm;
        if (ig) std::cout << " graph=" << *ig;
        if (it) std::cout << " tyj=" << *it;
        if (im) std::cout << " matrix=" << *im;
        std::cout << "\n";
      }
    }
  }
  long long total = static_cast<long long>(pairs.size());
  std::cout << "n=" << n << " pairs=" << total << " oracles=" << oracles << " seed=" << seed << "\n";
  if (sel.graph && sel.tyj) std::cout << "graph vs tyj:    " << gt_ok << "/" << total << " agree\n";
  if (sel.graph && sel.matrix) std::cout << "graph vs matrix: " << gm_ok << "/" << total << " agree\n";
  if (sel.tyj && sel.matrix) std::cout << "tyj vs matrix:   " << tm_ok << "/" << total << " agree\n";
  if (mismatches) {
    std::cout << "FAIL: " << mismatches << " pair(s) disagree\n";
    return 1;
  }
  std::cout << "OK\n";
  return 0;
}

int cmd_enumerate(int n, bool frobenius_only, const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open output file " + out_path);
    out = &file;
  }
  *out << enumeration_csv_header() << "\n";
  EnumerationStats stats = enumerate_seaweeds(n, frobenius_only, [&](const EnumerationRecord& r) {
    *out << enumeration_csv_row(r) << "\n";
    return true;
  });
  std::cerr << "records=" << stats.records << " frobenius=" << stats.frobenius
            << " crossing=" << stats.crossing << " distinct_specs=" << stats.distinct_specs << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meander graphs and indices of seaweed subalgebras in the classical Lie algebras"};
  app.require_subcommand(1);

  SpecOptions idx_opt, red_opt, gr_opt;
  bool json_trace = false;
  std::string format = "ascii";

  CLI::App* c_index = app.add_subcommand("index", "Compute the meander graph and its index");
  idx_opt.attach(c_index);

  CLI::App* c_reduce = app.add_subcommand("reduce", "Run the type D reduction to a terminal form");
  red_opt.attach(c_reduce);
  c_reduce->add_flag("--trace", json_trace, "Emit the trace as JSON");

  CLI::App* c_graph = app.add_subcommand("graph", "Render the meander graph");
  gr_opt.attach(c_graph);
  c_graph->add_option("--format", format, "ascii, svg or json")
      ->check(CLI::IsMember({"ascii", "svg", "json"}));

  int v_n = 0, v_trials = 5;
  bool v_exhaustive = false;
  long long v_samples = 0;
  std::string v_oracles = "graph,tyj,matrix";
  std::uint64_t v_seed = 1;
  CLI::App* c_verify = app.add_subcommand("verify", "Cross-check the index oracles on so_2n");
  c_verify->add_option("--n", v_n, "so_2n rank")->required();
  c_verify->add_flag("--exhaustive", v_exhaustive, "All 4^n subset pairs");
  c_verify->add_option("--samples", v_samples, "Number of random pairs");
  c_verify->add_option("--oracles", v_oracles, "Comma list from graph,tyj,matrix");
  c_verify->add_option("--seed", v_seed, "Random seed");
  c_verify->add_option("--trials", v_trials, "Functional draws per matrix-oracle evaluation");

  int e_n = 0;
  bool e_frob = false;
  std::string e_out = "-";
  CLI::App* c_enum = app.add_subcommand("enumerate", "List all subset pairs of so_2n as CSV");
  c_enum->add_option("--n", e_n, "so_2n rank")->required();
  c_enum->add_flag("--frobenius-only", e_frob, "Keep only index-0 records");
  c_enum->add_option("--out", e_out, "Output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_index->parsed()) return cmd_index(idx_opt);
    if (c_reduce->parsed()) return cmd_reduce(red_opt, json_trace);
    if (c_graph->parsed()) return cmd_graph(gr_opt, format);
    if (c_verify->parsed())
      return cmd_verify(v_n, v_exhaustive, v_samples, v_oracles, v_seed, v_trials);
    if (c_enum->parsed()) return cmd_enumerate(e_n, e_frob, e_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
