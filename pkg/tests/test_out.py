import json

import numpy as np
import orjson

from arbelos import out


def test_exact_pins_floats():
    assert out.dumps(0.1) == "0.10000000000000001"
    assert out.dumps(np.float64(0.9)) == "0.90000000000000002"
    assert out.dumps(1.0) == "1"


def test_exact_recurses():
    payload = {"a": [0.5, (0.25, "x")], "b": {"c": 2, "d": True, "e": None}}
    assert out.dumps(payload) == '{"a":[0.5,[0.25,"x"]],"b":{"c":2,"d":true,"e":null}}'


def test_round_trip_value():
    value = 2 / 3
    assert json.loads(out.dumps({"v": value}))["v"] == value
    assert len(out.dumps(value).replace("0.", "", 1)) == 17


def test_exact_leaves_non_floats():
    assert out.exact("s") == "s"
    assert out.exact(3) == 3
    assert isinstance(out.exact(0.5), orjson.Fragment)


def test_human():
    assert out.human(0.28274333882308139) == "0.2827433"
    assert out.human(1.0) == "1"
    assert out.human(True) == "True"
    assert out.human("C1") == "C1"


def test_table():
    rows = [{"name": "knife", "area": 0.28274333882308139}, {"name": "C", "area": 1.0}]
    assert out.table(rows).splitlines() == [
        "name   area",
        "knife  0.2827433",
        "C      1",
    ]
