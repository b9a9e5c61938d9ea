import json
import os
from pathlib import Path

import pytest

import rackkit

DATA = Path(os.environ.get("RACKKIT_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_nc5_axioms():
    r = rackkit.Rack.builtin("nc5")
    assert r.dim == 5
    assert all(r.check().values())
    assert not r.is_cocommutative()
    assert r.tri("x", "y") == {"t": "1"}


def test_json_round_trip():
    r = rackkit.Rack.builtin("leibniz2")
    again = rackkit.Rack.from_json(r.to_json())
    assert again.to_json() == r.to_json()
    assert json.loads(r.to_json())["ring"] == "Q"


def test_bad_scalar_rejected():
    doc = json.loads(rackkit.Rack.builtin("trivial1").to_json())
    doc["counit"][doc["unit"]] = "2/2"
    with pytest.raises(rackkit.ParseError):
        rackkit.Rack.from_json(json.dumps(doc))


def test_enveloping_series():
    u = rackkit.enveloping(rackkit.Rack.builtin("lie2"), 3, 2)
    assert u["series"] == [1, 3, 6, 10]
    assert u["stabilized"]


def test_deformation_complex():
    c = rackkit.deformation_complex(rackkit.Rack.builtin("abelian1"), 2)
    assert c["coder_dims"] == [1, 2]
    assert c["d_squared_zero"][1]


def test_cli():
    code, rep = rackkit.cli("check", DATA / "mutated_nc5.json")
    assert code == 2
    assert rep["axioms"]["morphism"]["witness"] == ["x", "y"]
    code, rep = rackkit.cli("env", "leibniz2", "--degree", "3", "--slack", "2", "--series")
    assert code == 0 and rep["series"] == [1, 2, 3, 4]


def test_precondition_error():
    with pytest.raises(rackkit.PreconditionError):
        rackkit.deformation_complex(rackkit.Rack.builtin("nc5"), 1)
