"""Meander graphs and indices of seaweed subalgebras of the classical Lie algebras.

Thin wrapper over the compiled ``_meander`` extension.  In an installed wheel
the extension lives inside this package; in a build tree it sits on
``PYTHONPATH`` as a top-level module.
"""

try:
    from ._meander import (  # type: ignore[attr-defined]
        canonicalize,
        enumerate_seaweeds,
        graph_json,
        index,
        oracle_index,
        parabolic_index,
        q_ec_index,
        reduce,
        render_ascii,
        render_svg,
        tyj_index,
        type_a_index,
    )
except ImportError:
    from _meander import (
        canonicalize,
        enumerate_seaweeds,
        graph_json,
        index,
        oracle_index,
        parabolic_index,
        q_ec_index,
        reduce,
        render_ascii,
        render_svg,
        tyj_index,
        type_a_index,
    )

__all__ = [
    "canonicalize",
    "enumerate_seaweeds",
    "graph_json",
    "index",
    "oracle_index",
    "parabolic_index",
    "q_ec_index",
    "reduce",
    "render_ascii",
    "render_svg",
    "tyj_index",
    "type_a_index",
]
