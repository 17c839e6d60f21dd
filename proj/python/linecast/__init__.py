"""Line-broadcasting schedules on complete k-trees.

Bounds come back as ``fractions.Fraction``; schedules are ``Schedule`` objects
with ``steps``, ``total_cost``, ``total_time``, ``validate()`` and ``to_json()``.
"""

from fractions import Fraction

from . import _core
from ._core import (
    CompleteKTree,
    LinecastError,
    Schedule,
    from_json,
    fromlevel_cost,
    lbckt_case,
    optimal_cost,
    run,
    time_limit,
    tree_size,
)

__all__ = [
    "CompleteKTree",
    "LinecastError",
    "Schedule",
    "alg1_upper",
    "alg2_upper",
    "alg3_upper",
    "dispatched_upper",
    "farley_bound",
    "from_json",
    "fromlevel_cost",
    "lbckt_case",
    "optimal_cost",
    "run",
    "cost_lower_bound",
    "time_limit",
    "tolevel_upper",
    "tree_size",
]


def _fraction(pair):
    return Fraction(*pair)


def farley_bound(k, r):
    return _fraction(_core.farley_bound(k, r))


def cost_lower_bound(k, r, leaf_adjust=False):
    return _fraction(_core.cost_lower_bound(k, r, leaf_adjust))


def alg1_upper(k, r):
    return _fraction(_core.alg1_upper(k, r))


def alg2_upper(k, r):
    return _fraction(_core.alg2_upper(k, r))


def alg3_upper(k, r):
    return _fraction(_core.alg3_upper(k, r))


def tolevel_upper(k, j):
    return _fraction(_core.tolevel_upper(k, j))


def dispatched_upper(k, r):
    return _fraction(_core.dispatched_upper(k, r))
