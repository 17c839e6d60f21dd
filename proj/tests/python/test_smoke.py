import json
from fractions import Fraction

import pytest

import linecast


def test_tree():
    t = linecast.CompleteKTree(2, 2)
    assert t.n == 7
    assert t.children(2) == [4, 5]
    assert t.path(4, 7) == [4, 2, 3, 7]
    assert t.locate(6) == (2, 3)


def test_bounds_are_exact():
    assert linecast.alg2_upper(5, 3) == Fraction(3861, 16)
    assert linecast.cost_lower_bound(3, 2) == 11
    assert linecast.farley_bound(2, 2) == 18
    assert linecast.lbckt_case(5, 3) == "alg2"


def test_run_and_validate():
    s = linecast.run(2, 2)
    assert s.algorithm == "alg3"
    assert s.total_time == 3
    assert 6 <= s.total_cost <= 14
    rep = s.validate(time_budget=3)
    assert rep["ok"] and rep["violations"] == []
    assert sum(len(step) for step in s.steps) == 6


def test_json_round_trip():
    s = linecast.run(3, 3, originator=20, alg="alg2")
    text = s.to_json()
    back = linecast.from_json(text)
    assert back.to_json() == text
    assert json.loads(text)["originator"] == 20


def test_oracle():
    cost, witness = linecast.optimal_cost(3, 1)
    assert cost == 4
    assert witness.validate()["ok"]
    with pytest.raises(linecast.LinecastError):
        linecast.optimal_cost(3, 2)


def test_errors():
    with pytest.raises(linecast.LinecastError):
        linecast.run(1, 2)
    with pytest.raises(linecast.LinecastError):
        linecast.run(2, 2, alg="nope")
