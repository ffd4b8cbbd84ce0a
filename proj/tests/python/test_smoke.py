import json
import os
from pathlib import Path

import pytest

import relcyl

DATA = Path(os.environ.get("RELCYL_DATA", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


SQUARE = {"dimension": 2, "base": 2, "tuples": [[0, 0], [0, 1], [1, 0], [1, 1]]}


def test_square_abstraction_is_tea():
    a = relcyl.abstract(SQUARE, "TEA")
    assert a["atoms"] == 4
    assert relcyl.validate(a) == []
    assert relcyl.check(a, "TEA") == []
    assert relcyl.classify(SQUARE)["closed_under_finite_transformations"]


def test_represent_square_pta():
    a = relcyl.abstract(SQUARE, "PTA")
    r = relcyl.represent(a, "PTA")
    assert r["play"]["outcome"] == "saturated"
    assert r["play"]["rounds"] == 11
    assert r["complete"]
    assert all(c["status"] != "fail" for c in r["verify"]["checks"])
    again = relcyl.verify(a, r["representation"], "PTA")
    assert again == r["verify"]


def test_unit_without_diagonal_closure_fails_pta():
    unit = {"dimension": 2, "base": 2, "tuples": [[0, 1]]}
    assert not relcyl.classify(unit)["is_D"]
    assert relcyl.check(relcyl.abstract(unit, "PTA"), "PTA") != []


def test_diagonals_recovered_from_ta_reduct():
    a = relcyl.abstract(SQUARE, "TEA")
    back = relcyl.define_diagonals(relcyl.reduct(a, "TA"))
    assert back["d"] == a["d"]


def test_words():
    word = relcyl.decompose([0, 0, 1])
    assert relcyl.hat(word, 3) == [0, 0, 1]
    assert relcyl.decompose([1, 0]) == [["swap", 0, 1]]


def test_eval_cylindrification():
    a = relcyl.abstract(SQUARE, "PTA")
    # c0 of the atom (0,0) is the column {(0,0),(1,0)}.
    atom = SQUARE["tuples"].index([0, 0])
    value = relcyl.eval(a, "c0 x0", {0: [atom]})
    expected = sorted(SQUARE["tuples"].index(t) for t in ([0, 0], [1, 0]))
    assert value == expected


def test_complex_algebra_of_tuple_frame():
    ca = relcyl.complex_algebra(relcyl.tuple_frame(SQUARE))
    assert ca["report"] == []
    assert ca["algebra"] == relcyl.abstract(SQUARE, "TA")


def test_negative_control_detected():
    problems = relcyl.validate(load("neg_broken_involution.json"))
    assert any("swap_dual involution" in p for p in problems)


def test_errors_map_to_python_exceptions():
    with pytest.raises(relcyl.FormatError):
        relcyl.check("{not json", "TA")
    with pytest.raises(relcyl.FormatError):
        relcyl.check(relcyl.abstract(SQUARE, "TA"), "XYZ")
    with pytest.raises(relcyl.PreconditionError):
        relcyl.tuple_frame({"dimension": 2, "base": 2, "tuples": [[0, 1]]})
