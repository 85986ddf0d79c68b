// Python bindings for the meander/seaweed library. The surface mirrors the
// CLI: build graphs, compute indices, run the reduction, cross-check oracles,
// enumerate so_2n seaweeds.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "meander/cascade.hpp"
#include "meander/frobenius.hpp"
#include "meander/graph_document.hpp"
#include "meander/matrix_oracle.hpp"
#include "meander/reduction.hpp"
#include "meander/render.hpp"

namespace py = pybind11;
using namespace meander;

namespace {

SeaweedSpec make_spec(const std::string& type, int n, const std::vector<int>& a,
                      const std::vector<int>& b, bool crossing) {
  if (type.size() != 1) throw std::invalid_argument("type must be one of A, B, C, D");
  AlgebraType ty = algebra_type_from_char(type[0]);
  Composition ca{a}, cb{b};
  switch (ty) {
    case AlgebraType::A: return SeaweedSpec::make_A(n, ca, cb);
    case AlgebraType::B: return SeaweedSpec::make_B(n, ca, cb);
    case AlgebraType::C: return SeaweedSpec::make_C(n, ca, cb);
    case AlgebraType::D: return SeaweedSpec::make_D(n, ca, cb, crossing);
  }
  throw std::logic_error("unreachable");
}

RootSubset make_subset(int rank, const std::vector<int>& members) {
  RootSubset s = RootSubset::empty(rank);
  for (int i : members) s = s.with(i);
  return s;
}

py::dict spec_dict(const SeaweedSpec& spec) {
  py::dict d;
  d["type"] = std::string(1, algebra_type_char(spec.type));
  d["n"] = spec.n;
  d["a"] = spec.a.parts();
  d["b"] = spec.b.parts();
  d["crossing"] = spec.crossing;
  d["notation"] = spec.to_string();
  return d;
}

py::dict report_dict(const SeaweedSpec& spec, const IndexReport& r) {
  py::dict d;
  d["index"] = r.index;
  if (spec.type == AlgebraType::D)
    d["epsilon"] = r.epsilon;
  else
    d["epsilon"] = py::none();
  d["cycles"] = r.summary.cycles;
  d["segments"] = r.summary.segments;
  d["sigma_stable_segments"] = r.summary.sigma_stable_segments;
  return d;
}

py::dict state_dict(const ReductionState& st) {
  py::dict d;
  d["n"] = st.spec.n;
  d["a"] = st.spec.a.parts();
  d["b"] = st.spec.b.parts();
  d["crossing"] = st.spec.crossing;
  d["notation"] = st.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_meander, m) {
  m.doc() = "Meander graphs and indices of seaweed subalgebras of the classical Lie algebras";

  m.def(
      "index",
      [](const std::string& type, int n, const std::vector<int>& a, const std::vector<int>& b,
         bool crossing) {
        SeaweedSpec spec = make_spec(type, n, a, b, crossing);
        return report_dict(spec, index_of_spec(spec));
      },
      py::arg("type"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("crossing") = false,
      "Index report of the seaweed from its meander graph (type A reports gl)");

  m.def(
      "type_a_index",
      [](const std::vector<int>& a, const std::vector<int>& b, const std::string& flavor) {
        if (flavor != "gl" && flavor != "sl") throw std::invalid_argument("flavor must be gl or sl");
        return index_A(Composition{a}, Composition{b},
                       flavor == "gl" ? TypeAFlavor::GL : TypeAFlavor::SL);
      },
      py::arg("a"), py::arg("b"), py::arg("flavor") = "gl");

  m.def(
      "canonicalize",
      [](int n, const std::vector<int>& s, const std::vector<int>& t) {
        return spec_dict(canonicalize_seaweed_D(n, make_subset(n, s), make_subset(n, t)));
      },
      py::arg("n"), py::arg("s"), py::arg("t"),
      "Composition-form spec of the so_2n seaweed q(S, T), subsets given as simple-root indices");

  m.def(
      "graph_json",
      [](const std::string& type, int n, const std::vector<int>& a, const std::vector<int>& b,
         bool crossing) {
        return encode_graph_document(make_graph_document(make_spec(type, n, a, b, crossing)));
      },
      py::arg("type"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("crossing") = false);

  m.def(
      "render_ascii",
      [](const std::string& type, int n, const std::vector<int>& a, const std::vector<int>& b,
         bool crossing) { return render_ascii(make_spec(type, n, a, b, crossing)); },
      py::arg("type"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("crossing") = false);

  m.def(
      "render_svg",
      [](const std::string& type, int n, const std::vector<int>& a, const std::vector<int>& b,
         bool crossing) { return render_svg(make_spec(type, n, a, b, crossing)); },
      py::arg("type"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("crossing") = false);

  m.def(
      "reduce",
      [](int n, const std::vector<int>& a, const std::vector<int>& b, bool crossing) {
        ReductionTrace tr = reduce_trace(make_spec("D", n, a, b, crossing));
        py::list steps;
        for (const ReductionStep& s : tr.steps) {
          py::dict d;
          d["rule"] = reduction_rule_name(s.rule);
          d["index_delta"] = s.index_delta;
          d["successor"] = state_dict(s.successor);
          steps.append(d);
        }
        py::dict out;
        out["initial"] = state_dict(tr.initial);
        out["steps"] = steps;
        py::dict term;
        term["rule"] = reduction_rule_name(tr.terminal_rule);
        term["state"] = state_dict(tr.terminal_state);
        term["index"] = tr.terminal_index;
        out["terminal"] = term;
        out["total_index"] = tr.total_index;
        return out;
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("crossing") = false,
      "Inductive reduction of the type D seaweed q_n(a|b) down to a terminal form");

  m.def(
      "tyj_index",
      [](int n, const std::string& type, const std::vector<int>& s, const std::vector<int>& t) {
        if (type.size() != 1) throw std::invalid_argument("type must be A or D");
        AlgebraType ty = algebra_type_from_char(type[0]);
        int rank = ty == AlgebraType::A ? n - 1 : n;
        return tyj_index(n, ty, make_subset(rank, s), make_subset(rank, t));
      },
      py::arg("n"), py::arg("type"), py::arg("s"), py::arg("t"),
      "Index by the cascade rank formula: n + dim E_S + dim E_T - 2 dim(E_S + E_T)");

  m.def(
      "oracle_index",
      [](int n, const std::vector<int>& s, const std::vector<int>& t, int trials,
         std::uint64_t seed) {
        return oracle_index(n, make_subset(n, s), make_subset(n, t), trials, seed);
      },
      py::arg("n"), py::arg("s"), py::arg("t"), py::arg("trials") = 5, py::arg("seed") = 1,
      "Index of the so_2n seaweed via random-functional matrix ranks over F_p");

  m.def(
      "enumerate_seaweeds",
      [](int n, bool frobenius_only) {
        py::list out;
        for (const EnumerationRecord& r : enumerate_seaweeds(n, frobenius_only)) {
          py::dict d;
          d["n"] = r.n;
          d["s_mask"] = r.s_mask;
          d["t_mask"] = r.t_mask;
          d["crossing"] = r.crossing;
          d["index"] = r.index;
          d["epsilon"] = r.epsilon;
          d["cycles"] = r.cycles;
          d["segments"] = r.segments;
          d["sigma_stable_segments"] = r.sigma_stable_segments;
          d["frobenius"] = r.frobenius;
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("frobenius_only") = false,
      "All 4^n subset pairs of so_2n with their index data");

  m.def(
      "parabolic_index",
      [](const std::vector<int>& a, int n) {
        return parabolic_index_closed_form(Composition{a}, n);
      },
      py::arg("a"), py::arg("n"), "Closed form for ind q_n(a|empty)");
  m.def("q_ec_index", &q_ec_index, py::arg("m"), "Closed form m - 2");
}
