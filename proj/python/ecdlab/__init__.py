"""Efficient closed domination in digraph products.

A set S is an efficient closed dominating (ECD) set of a digraph D when the
closed out-neighborhoods of its members partition V(D): every vertex is
dominated exactly once.  This package pairs an exact-cover solver with
theorem-backed deciders for the four standard digraph products and the factor
families those theorems are stated over.

Certificates and reports come back as plain dicts.  Functions that enumerate
or search raise ``BoundError`` when an instance exceeds the configured size
caps (see the ``ECDLAB_BOUNDS`` environment variable).
"""

import json as _json

from ._core import (
    BoundError,
    Digraph,
    certify_ecd_set,
    cycle,
    domination_number,
    enumerate_ecd_sets,
    find_ecd_set,
    find_eca_set,
    is_ecd_set,
    orient_from_independent_set,
    parse_edgelist,
    path,
    product,
    product_fold,
    serialize_edgelist,
    sink_free_cycle,
    star,
    validate,
)
from . import _core as _c

__all__ = [
    "BoundError",
    "Digraph",
    "certify_ecd_set",
    "cycle",
    "decide_cartesian_cycle",
    "decide_cartesian_star",
    "decide_direct_cycles",
    "decide_direct_paths",
    "decide_lex",
    "decide_strong",
    "domination_number",
    "enumerate_ecd_sets",
    "find_ecd_set",
    "find_eca_set",
    "is_ecd_set",
    "orient_from_independent_set",
    "parse_edgelist",
    "path",
    "product",
    "product_fold",
    "recognize",
    "serialize_edgelist",
    "sink_free_cycle",
    "star",
    "validate",
]


def recognize(family, digraph):
    """Membership witness for a factor family ("d1" | "d2" | "d3" | "d0").

    Returns the witness as a dict, or None when the digraph is not a member.
    """
    text = _c.recognize_json(family, digraph)
    return None if text is None else _json.loads(text)


def decide_strong(d, f):
    """Decide whether the strong product of d and f has an ECD set."""
    return _json.loads(_c.decide_strong_json(d, f))


def decide_lex(d, f):
    """Decide whether the lexicographic product of d and f has an ECD set."""
    return _json.loads(_c.decide_lex_json(d, f))


def decide_cartesian_cycle(d, k):
    """Decide the cartesian product of d with the sink-free cycle of length k."""
    return _json.loads(_c.decide_cartesian_cycle_json(d, k))


def decide_cartesian_star(f, t, mode="center-source", t1=0):
    """Decide the cartesian product of f with an oriented star on t leaves."""
    return _json.loads(_c.decide_cartesian_star_json(f, t, mode, t1))


def decide_direct_cycles(words):
    """Decide the direct product of oriented cycles given by turn words."""
    return _json.loads(_c.decide_direct_cycles_json(list(words)))


def decide_direct_paths(words):
    """Decide the direct product of oriented paths given by step words."""
    return _json.loads(_c.decide_direct_paths_json(list(words)))
