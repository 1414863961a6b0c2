import json

import pytest

from hic.homotopy import (
    CONTRACTIBLE,
    EMPTY,
    HomotopyType,
    dims_mod_r_valid,
    sphere,
    suspend,
    wedge,
    wedge_combine,
)


def test_suspension():
    assert suspend(sphere(1), 2) == sphere(3)
    assert suspend(EMPTY, 3) == sphere(2)
    assert suspend(EMPTY, 1) == sphere(0)
    assert suspend(CONTRACTIBLE, 5) == CONTRACTIBLE
    assert suspend(wedge({1: 2, 4: 1}), 2) == wedge({3: 2, 6: 1})


def test_wedge_combine():
    assert wedge_combine([sphere(1), CONTRACTIBLE, sphere(3)]) == wedge({1: 1, 3: 1})
    assert wedge_combine([CONTRACTIBLE, CONTRACTIBLE]) == CONTRACTIBLE
    assert wedge_combine([sphere(3), sphere(3), sphere(1)]) == wedge({1: 1, 3: 2})
    with pytest.raises(ValueError):
        wedge_combine([EMPTY, sphere(1)])


def test_dims_mod_r():
    assert dims_mod_r_valid(wedge({1: 1, 3: 2}), 2)
    assert not dims_mod_r_valid(wedge({2: 1}), 2)
    assert dims_mod_r_valid(CONTRACTIBLE, 4)


def test_validation():
    with pytest.raises(ValueError):
        HomotopyType("wedge", ())
    with pytest.raises(ValueError):
        HomotopyType("wedge", ((-1, 1),))
    with pytest.raises(ValueError):
        HomotopyType("sphere")
    assert sphere(-1) == EMPTY
    assert wedge({2: 0}) == CONTRACTIBLE


def test_json_forms():
    assert json.loads(CONTRACTIBLE.to_json()) == {"type": "contractible"}
    assert json.loads(EMPTY.to_json()) == {"type": "empty"}
    T = wedge({1: 1, 3: 2})
    assert json.loads(T.to_json()) == {
        "type": "wedge", "spheres": [{"dim": 1, "count": 1}, {"dim": 3, "count": 2}]
    }
    for t in (CONTRACTIBLE, EMPTY, T):
        assert HomotopyType.from_dict(json.loads(t.to_json())) == t


def test_str():
    assert str(wedge({1: 1, 3: 2})) == "S^1 v 2xS^3"
