"""Quandle coloring invariants of oriented link diagrams."""

import json

from ._qcolor import (  # noqa: F401
    CapExceeded,
    Error,
    FiniteQuandle,
    LinkDiagram,
    NotAUnit,
    ParseError,
    ValidationError,
    catalog,
    catalog_names,
    colorings,
    compare_json,
    connected_sum,
    counting_invariant,
    parse_pd,
    parse_relations,
    phi_polynomial,
    reidemeister_r1,
    reidemeister_r2,
    trivial_t_classes,
)


def compare(link_a, link_b, n_values, t_policy="all-units", cap=1_000_000):
    """Distinguishability report for two catalog links, as a dict."""
    return json.loads(compare_json(link_a, link_b, list(n_values), str(t_policy), cap))
