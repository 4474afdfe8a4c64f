"""MDS self-dual codes from duadic cyclic and negacyclic codes.

The heavy lifting is in the compiled ``_core`` module; the wrappers here
decode its JSON replies into plain Python objects.
"""

import json

from . import _core
from ._core import DuadicError

__all__ = ["DuadicError", "families", "construct", "factor", "verify_table", "inspect", "solve_gamma"]


def families():
    return list(_core.families())


def construct(family, q, n=None, *, p=None, m=None, t=None, budget=10_000_000, threads=1, force=False,
              timings=True):
    """Build and verify one construction; returns the report as a dict."""
    return json.loads(_core.construct(family, q, n, p, m, t, budget, threads, force, timings))


def factor(q, n, shift=1):
    return json.loads(_core.factor(q, n, shift))


def verify_table(table, *, budget=10_000_000, threads=1, timings=True):
    return json.loads(_core.verify_table(str(table), budget, threads, timings))


def inspect(doc, *, budget=10_000_000, threads=1):
    """Re-run the oracles on code records; doc may be a dict or a JSON string."""
    if not isinstance(doc, str):
        doc = json.dumps(doc)
    return json.loads(_core.inspect(doc, budget, threads))


def solve_gamma(equation, q, n):
    """Smallest solution as a coefficient list (constant term first), or None."""
    return _core.solve_gamma(equation, q, n)
