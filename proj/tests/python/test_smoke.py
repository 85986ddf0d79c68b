"""End-to-end smoke tests for the Python bindings."""

import json

import meander


def test_type_a_index():
    assert meander.index("A", 9, [2, 4, 3], [5, 4])["index"] == 3
    assert meander.type_a_index([2, 4, 3], [5, 4], "gl") == 3
    assert meander.type_a_index([2, 4, 3], [5, 4], "sl") == 2
    # A Frobenius pair for sl_3.
    assert meander.type_a_index([2, 1], [3], "sl") == 0


def test_type_d_crossing_index():
    rep = meander.index("D", 5, [2, 3], [1, 4], crossing=True)
    assert rep["index"] == 1
    assert rep["epsilon"] == 0
    rep = meander.index("D", 6, [2, 4], [6], crossing=True)
    assert rep["index"] == 0
    assert rep["epsilon"] == -1
    assert rep["cycles"] == 1 and rep["segments"] == 0


def test_epsilon_is_none_outside_type_d():
    assert meander.index("C", 5, [2, 2, 1], [3, 2])["epsilon"] is None
    assert meander.index("B", 3, [1, 1, 1], [1, 1, 1])["index"] == 3


def test_canonicalize_crossing_pair():
    spec = meander.canonicalize(6, [1, 3, 4, 6], [1, 2, 3, 4, 5])
    assert spec["crossing"] is True
    assert spec["a"] == [2, 4]
    assert spec["b"] == [6]
    assert spec["notation"] == "q_6(2,4|6)_c"


def test_reduce_trace_totals():
    out = meander.reduce(7, [2, 1, 4], [3, 4])
    assert out["total_index"] == meander.index("D", 7, [2, 1, 4], [3, 4])["index"]
    assert out["steps"], "a non-trivial seaweed should take at least one step"
    running = sum(s["index_delta"] for s in out["steps"]) + out["terminal"]["index"]
    assert running == out["total_index"]


def test_reduce_hits_q_ec_terminal():
    out = meander.reduce(5, [5], [5], crossing=True)
    assert out["terminal"]["rule"] == "terminal-q_ec"
    assert out["total_index"] == meander.q_ec_index(5) == 3


def test_oracle_agreement_on_small_rank():
    # q_4(2,2|4): S drops roots 2 and 4, T drops root 4.
    spec = meander.canonicalize(4, [1, 3], [1, 2, 3])
    assert spec["a"] == [2, 2] and spec["b"] == [4] and spec["crossing"] is False
    graph = meander.index("D", 4, [2, 2], [4])["index"]
    tyj = meander.tyj_index(4, "D", [1, 3], [1, 2, 3])
    mat = meander.oracle_index(4, [1, 3], [1, 2, 3], trials=3, seed=7)
    assert graph == tyj == mat == 2


def test_parabolic_closed_form():
    assert meander.parabolic_index([2, 2, 1], 5) == 3
    assert meander.parabolic_index([5], 5) == 1
    assert meander.parabolic_index([2], 4) == 3


def test_enumerate_seaweeds():
    records = meander.enumerate_seaweeds(3)
    assert len(records) == 64
    frobenius = meander.enumerate_seaweeds(3, frobenius_only=True)
    assert all(r["frobenius"] for r in frobenius)
    assert {(r["s_mask"], r["t_mask"]) for r in frobenius} <= {
        (r["s_mask"], r["t_mask"]) for r in records if r["index"] == 0
    }


def test_graph_json_document():
    doc = json.loads(meander.graph_json("D", 6, [2, 4], [6], crossing=True))
    assert doc["schema_version"] == "1"
    assert doc["index"] == 0
    assert doc["epsilon"] == -1
    kinds = [c["kind"] for c in doc["components"]]
    assert kinds.count("cycle") == 1 and "segment" not in kinds


def test_renderers_produce_output():
    art = meander.render_ascii("D", 5, [2, 3], [1, 4], crossing=True)
    assert "o" in art
    svg = meander.render_svg("A", 9, [2, 4, 3], [5, 4])
    assert svg.startswith("<svg") or "<svg" in svg
    assert "</svg>" in svg
