"""Exact enumeration of rooted maps, characters, Tamari intervals and map series."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    InputError,
    InvariantError,
    character,
    character_table,
    count_factorizations,
    count_rooted_bipartite,
    count_rooted_constellations,
    count_rooted_hypermaps,
    count_rooted_maps,
    dual_interval,
    jobs,
    m_core,
    nu_tamari_size,
    planar_map_formula,
    set_jobs,
    sync_intervals,
    tamari_interval_count,
)

__all__ = [
    "InputError",
    "InvariantError",
    "Report",
    "canonical_form",
    "character",
    "character_table",
    "count_factorizations",
    "count_rooted_bipartite",
    "count_rooted_constellations",
    "count_rooted_hypermaps",
    "count_rooted_maps",
    "dual_interval",
    "dual_map",
    "enumerate_rooted_maps",
    "interval_to_map",
    "interval_to_tree",
    "jobs",
    "m_core",
    "map_genus",
    "map_to_interval",
    "map_to_tree",
    "nonseparable_planar_maps",
    "nu_tamari_size",
    "planar_map_formula",
    "root_equivalent",
    "run_cli",
    "series",
    "set_jobs",
    "sync_intervals",
    "tamari_interval_count",
    "tree_to_interval",
    "tree_to_map",
    "verify",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def map_genus(m):
    return _core.map_genus(_dump(m))


def canonical_form(m):
    return json.loads(_core.canonical_form(_dump(m)))


def dual_map(m):
    return json.loads(_core.dual_map(_dump(m)))


def root_equivalent(a, b):
    return _core.root_equivalent(_dump(a), _dump(b))


def enumerate_rooted_maps(n, genus=None):
    return [json.loads(s) for s in _core.enumerate_rooted_maps(n, genus)]


def nonseparable_planar_maps(n):
    return [json.loads(s) for s in _core.nonseparable_planar_maps(n)]


def map_to_interval(m):
    return _core.map_to_interval(_dump(m))


def interval_to_map(lower, upper):
    return json.loads(_core.interval_to_map(lower, upper))


def map_to_tree(m):
    return json.loads(_core.map_to_tree(_dump(m)))


def tree_to_map(t):
    return json.loads(_core.tree_to_map(_dump(t)))


def tree_to_interval(t):
    return _core.tree_to_interval(_dump(t))


def interval_to_tree(lower, upper):
    return json.loads(_core.interval_to_tree(lower, upper))


def series(target, order=6, K=2, m=2, genus=1):
    """Coefficients as {exponent tuple: Fraction} together with the variable names."""
    names, terms = _core.series(target, order, K, m, genus)
    return list(names), {mono: Fraction(num, den) for mono, num, den in terms}


class Report:
    __slots__ = ("ok", "summary", "failure", "cases")

    def __init__(self, ok, summary, failure, cases):
        self.ok, self.summary, self.failure, self.cases = ok, summary, failure, cases

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"Report(ok={self.ok}, {self.summary if self.ok else self.failure!r})"


_CHECKS = {
    "planar": _core.verify_planar_counts,
    "characters": _core.verify_characters,
    "littlewood": _core.verify_littlewood,
    "tamari": _core.verify_tamari,
    "bijection": _core.verify_bijection,
    "series": _core.verify_series,
    "triangulations": _core.verify_triangulations,
}


def verify(name, *args, **kwargs):
    try:
        check = _CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}; known: {', '.join(sorted(_CHECKS))}") from None
    return Report(*check(*args, **kwargs))


def run_cli(*args):
    """Runs the mapforge command line in-process; returns (status, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
